#include "chiy/hodge.hpp"

#include <stdexcept>

namespace chiy {

const char* to_string(ValidationTier tier) {
    switch (tier) {
        case ValidationTier::Raw: return "raw";
        case ValidationTier::Kaehler: return "kaehler";
        case ValidationTier::Mirror: return "mirror";
    }
    return "?";
}

ValidationTier parse_tier(const std::string& name) {
    if (name == "raw") return ValidationTier::Raw;
    if (name == "kaehler") return ValidationTier::Kaehler;
    if (name == "mirror") return ValidationTier::Mirror;
    throw std::invalid_argument("unknown validation tier \"" + name + "\"");
}

HodgeDiamond::HodgeDiamond(int dimension, std::vector<std::vector<long long>> rows)
    : dimension_(dimension), rows_(std::move(rows)) {
    if (dimension < 0) throw std::invalid_argument("HodgeDiamond: negative dimension");
    size_t side = static_cast<size_t>(dimension) + 1;
    if (rows_.size() != side)
        throw std::invalid_argument("HodgeDiamond: diamond shape must be (n+1)x(n+1)");
    for (const auto& row : rows_) {
        if (row.size() != side)
            throw std::invalid_argument("HodgeDiamond: diamond shape must be (n+1)x(n+1)");
        for (long long v : row) {
            if (v < 0) throw std::invalid_argument("HodgeDiamond: negative entry");
        }
    }
}

HodgeDiamond HodgeDiamond::pure(std::vector<long long> diagonal) {
    if (diagonal.empty()) throw std::invalid_argument("HodgeDiamond: empty diagonal");
    int n = static_cast<int>(diagonal.size()) - 1;
    std::vector<std::vector<long long>> rows(diagonal.size(),
                                             std::vector<long long>(diagonal.size(), 0));
    for (size_t p = 0; p < diagonal.size(); ++p) rows[p][p] = diagonal[p];
    return HodgeDiamond(n, std::move(rows));
}

std::vector<ValidationIssue> validate(const HodgeDiamond& d, ValidationTier tier) {
    std::vector<ValidationIssue> issues;
    int n = d.dimension();
    auto flag = [&](const char* constraint, int p, int q, const std::string& detail) {
        issues.push_back({constraint, p, q, detail});
    };
    // Raw nonnegativity is enforced at construction; nothing to re-check.
    if (tier == ValidationTier::Raw) return issues;

    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            long long h = d.entry(p, q);
            if (d.entry(n - p, n - q) != h)
                flag("hodge.serre", p, q,
                     "h^{" + std::to_string(p) + "," + std::to_string(q) + "} != h^{" +
                         std::to_string(n - p) + "," + std::to_string(n - q) + "}");
            if (d.entry(q, p) != h)
                flag("hodge.conjugation", p, q,
                     "h^{" + std::to_string(p) + "," + std::to_string(q) + "} != h^{" +
                         std::to_string(q) + "," + std::to_string(p) + "}");
        }
        if (d.entry(p, p) < 1)
            flag("hodge.diagonal", p, p, "h^{p,p} must be >= 1 at p=" + std::to_string(p));
    }
    if (tier == ValidationTier::Mirror) {
        if (n % 2 != 0)
            flag("hodge.parity", 0, 0, "mirror symmetry requires even complex dimension");
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                if (d.entry(p, n - q) != d.entry(p, q))
                    flag("hodge.mirror", p, q,
                         "h^{" + std::to_string(p) + "," + std::to_string(q) + "} != h^{" +
                             std::to_string(p) + "," + std::to_string(n - q) + "}");
    }
    return issues;
}

BettiVector::BettiVector(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("BettiVector: empty");
    for (long long v : entries_) {
        if (v < 0) throw std::invalid_argument("BettiVector: negative entry");
    }
}

bool BettiVector::is_palindromic() const {
    int k = top_degree();
    for (int i = 0; 2 * i <= k; ++i) {
        if (b(i) != b(k - i)) return false;
    }
    return true;
}

MomentSpec MomentSpec::monomial(int p_exp, int q_exp, const Rational& coeff) {
    if (p_exp < 0 || q_exp < 0) throw std::invalid_argument("MomentSpec: negative exponent");
    MomentSpec spec;
    spec.terms.push_back({p_exp, q_exp, coeff});
    return spec;
}

BettiVector betti_from_diamond(const HodgeDiamond& d) {
    int n = d.dimension();
    std::vector<long long> b(static_cast<size_t>(2 * n) + 1, 0);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) b[static_cast<size_t>(p + q)] += d.entry(p, q);
    return BettiVector(std::move(b));
}

ChiProfile chi_profile(const HodgeDiamond& d) {
    int n = d.dimension();
    ChiProfile out;
    out.chi.assign(static_cast<size_t>(n) + 1, 0);
    for (int p = 0; p <= n; ++p) {
        long long chi_p = 0;
        for (int q = 0; q <= n; ++q) chi_p += (q % 2 ? -1 : 1) * d.entry(p, q);
        out.chi[static_cast<size_t>(p)] = chi_p;
        out.chi_y += YPolynomial::monomial(p, Rational(chi_p));
    }
    return out;
}

namespace {
long long ipow(int base, int exp) {
    long long r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;  // 0^0 = 1 by the empty product
}
}  // namespace

Rational h_moment(const HodgeDiamond& d, const MomentSpec& spec) {
    int n = d.dimension();
    Rational acc(0);
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            long long h = d.entry(p, q);
            if (h == 0) continue;
            Rational x(0);
            for (const auto& term : spec.terms)
                x += term.coeff * Rational(ipow(p, term.p_exp) * ipow(q, term.q_exp));
            if ((p + q) % 2) x = -x;
            acc += x * Rational(h);
        }
    }
    return acc;
}

Rational f_moment(const BettiVector& betti, int i) {
    if (i < 0) throw std::invalid_argument("f_moment: negative exponent");
    Rational acc(0);
    for (int p = 0; p <= betti.top_degree(); ++p) {
        long long term = betti.b(p) * ipow(p, i);
        acc += Rational((p % 2) ? -term : term);
    }
    return acc;
}

DiamondPredicates predicates(const HodgeDiamond& d) {
    int n = d.dimension();
    DiamondPredicates out;
    out.is_pure = true;
    out.is_mirror = true;
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            if (p != q && d.entry(p, q) != 0) out.is_pure = false;
            if (d.entry(p, n - q) != d.entry(p, q)) out.is_mirror = false;
        }
    }
    out.is_kaehler_symmetric = validate(d, ValidationTier::Kaehler).empty();
    return out;
}

YPolynomial poincare_polynomial(const BettiVector& betti) {
    YPolynomial acc;
    for (int i = 0; i <= betti.top_degree(); ++i)
        acc += YPolynomial::monomial(i, Rational(betti.b(i)));
    return acc;
}

YPolynomial poincare_residual(const BettiVector& betti) {
    YPolynomial p = poincare_polynomial(betti);
    return p - p.reversed(betti.top_degree());
}

}  // namespace chiy
