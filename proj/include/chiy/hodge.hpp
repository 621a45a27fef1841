// Hodge diamonds, Betti vectors, and their alternating moment functionals.
#pragma once

#include "chiy/rational.hpp"
#include "chiy/ypolynomial.hpp"

#include <string>
#include <vector>

namespace chiy {

enum class ValidationTier { Raw, Kaehler, Mirror };

const char* to_string(ValidationTier tier);
ValidationTier parse_tier(const std::string& name);

/// (n+1) x (n+1) grid of Hodge numbers h^{p,q}. Entries are validated
/// nonnegative at construction; the symmetry tiers are checked by validate().
class HodgeDiamond {
public:
    /// rows[q][p] = h^{p,q}; shape must be (n+1) x (n+1).
    HodgeDiamond(int dimension, std::vector<std::vector<long long>> rows);
    /// Diamond with the given diagonal h^{p,p} and zeros elsewhere.
    static HodgeDiamond pure(std::vector<long long> diagonal);

    int dimension() const { return dimension_; }
    long long entry(int p, int q) const { return rows_[static_cast<size_t>(q)][static_cast<size_t>(p)]; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    bool operator==(const HodgeDiamond& o) const {
        return dimension_ == o.dimension_ && rows_ == o.rows_;
    }

private:
    int dimension_ = 0;
    std::vector<std::vector<long long>> rows_;
};

struct ValidationIssue {
    std::string constraint;  // "hodge.serre", "hodge.diagonal", ...
    int p = 0, q = 0;
    std::string detail;
};

/// Violated identities of the requested tier; empty report = pass.
/// Mirror includes the Kaehler identities plus h^{p,q} = h^{p,n-q} and the
/// even-dimension hypothesis.
std::vector<ValidationIssue> validate(const HodgeDiamond& diamond, ValidationTier tier);

/// b_0..b_k of a closed manifold; entries are nonnegative.
class BettiVector {
public:
    explicit BettiVector(std::vector<long long> entries);

    int top_degree() const { return static_cast<int>(entries_.size()) - 1; }
    long long b(int i) const {
        return (i < 0 || i > top_degree()) ? 0 : entries_[static_cast<size_t>(i)];
    }
    const std::vector<long long>& entries() const { return entries_; }
    /// Poincare duality b_i = b_{k-i}.
    bool is_palindromic() const;

    bool operator==(const BettiVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<long long> entries_;
};

/// A polynomial x(p,q): list of (p-exponent, q-exponent, coefficient).
struct MomentSpec {
    struct Term {
        int p_exp = 0, q_exp = 0;
        Rational coeff = Rational(1);
    };
    std::vector<Term> terms;

    static MomentSpec monomial(int p_exp, int q_exp, const Rational& coeff = Rational(1));
    static MomentSpec p_power(int i) { return monomial(i, 0); }
};

/// b_i = sum_{p+q=i} h^{p,q}; length 2n+1.
BettiVector betti_from_diamond(const HodgeDiamond& diamond);

struct ChiProfile {
    std::vector<long long> chi;  // chi^0..chi^n
    YPolynomial chi_y;
};

/// chi^p = sum_q (-1)^q h^{p,q} and the assembled chi_y.
ChiProfile chi_profile(const HodgeDiamond& diamond);

/// h(x) = sum_{p,q} (-1)^{p+q} h^{p,q} x(p,q), exact.
Rational h_moment(const HodgeDiamond& diamond, const MomentSpec& spec);

/// f(i) = sum_p (-1)^p b_p p^i, exact.
Rational f_moment(const BettiVector& betti, int i);

struct DiamondPredicates {
    bool is_pure = false;               // h^{p,q} = 0 whenever p != q
    bool is_mirror = false;             // h^{p,q} = h^{p,n-q} entrywise
    bool is_kaehler_symmetric = false;  // Serre + conjugation + positive diagonal
};

DiamondPredicates predicates(const HodgeDiamond& diamond);

/// P_y = sum b_i y^i.
YPolynomial poincare_polynomial(const BettiVector& betti);
/// P_y - y^k P_{1/y}; zero exactly for palindromic vectors.
YPolynomial poincare_residual(const BettiVector& betti);

}  // namespace chiy
