// Exact checkable constraints linking Betti vectors, Hodge diamonds, and
// Chern numbers: the Salamon relation, the Chern-number lower bounds, the
// Calabi-Yau residual, and the minus-one consistency battery.
#pragma once

#include "chiy/genus.hpp"
#include "chiy/hodge.hpp"
#include "chiy/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chiy {

enum class ConstraintStatus { Satisfied, Violated, EqualityAttained, NotApplicable };

const char* to_string(ConstraintStatus status);

/// One exact comparison; no tolerance parameter exists anywhere.
struct ConstraintReport {
    std::string id;
    ConstraintStatus status = ConstraintStatus::Satisfied;
    Rational left, right;
    std::string witness;

    bool violated() const { return status == ConstraintStatus::Violated; }
};

/// True when some record is violated (the CLI's exit-1 condition).
bool any_violated(const std::vector<ConstraintReport>& reports);

/// sum_i (-1)^i b_i [3i^2 - n(3n+1/2)]; equals c_1 c_{n-1} for
/// mirror-symmetric Hodge numbers, 0 for hyperKaehler data. Throws
/// std::domain_error for odd n.
Rational salamon_residual(const BettiVector& betti, int n);

/// (1/2){ sum_{i even} b_i [3i^2 - n(3n+1)] - sum_{i odd} b_i [9i^2 - n(3n+1)] }:
/// the lower bound for c_1 c_{n-1} on Kaehler data.
Rational c1cn1_lower_bound(const BettiVector& betti, int n);

/// sum_{i odd} b_i [9i^2 - n(3n+1)] - sum_{i even} b_i [3i^2 - n(3n+1)];
/// >= 0 for data with c_1 c_{n-1} = 0, equality exactly in pure type.
Rational calabi_yau_residual(const BettiVector& betti, int n);

/// (1/24){ sum_{i even} b_i [75i^4 - n(75n^3+90n^2+5n-2)]
///        - sum_{i odd} b_i [165i^4 - n(75n^3+90n^2+5n-2)] }:
/// the lower bound for c_2 c_{n-2} on hyperKaehler data (never attained).
/// Throws std::domain_error for odd n.
Rational c2cn2_lower_bound(const BettiVector& betti, int n);

/// For each i <= depth compares the diamond moment h(p^i) with the evaluated
/// Chern-number expression; all equal iff diamond and Chern numbers describe
/// the same chi_y. Ids "minusone.p<i>".
std::vector<ConstraintReport> minus_one_consistency(const HodgeDiamond& diamond,
                                                    const ChernNumbers& chern, int depth);

/// The partition indexing c_1 c_{n-1} (degenerates to c_1 and c_n at n <= 2);
/// nullopt for n = 0.
std::optional<Partition> c1cn1_partition(int n);
/// The partition indexing c_2 c_{n-2}; nullopt for n < 2.
std::optional<Partition> c2cn2_partition(int n);

/// Exact equality record.
ConstraintReport compare_exact(const std::string& id, const Rational& left, const Rational& right);

/// Lower-bound record: value >= bound, with EqualityAttained on equality.
/// `pure`, when known, downgrades an equality on a non-pure diamond to a
/// violation (equality certifies pure type).
ConstraintReport lower_bound_report(const std::string& id, const Rational& value,
                                    const Rational& bound, std::optional<bool> pure);

}  // namespace chiy
