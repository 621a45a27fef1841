// Residue-formula evaluation from torus fixed-point data: Morse indices from
// weight signs, localized chi_y and Poincare polynomials, and the full
// Hamiltonian-action obstruction battery.
#pragma once

#include "chiy/constraints.hpp"
#include "chiy/genus.hpp"
#include "chiy/hodge.hpp"
#include "chiy/ypolynomial.hpp"

#include <optional>
#include <vector>

namespace chiy {

/// An isolated fixed point: either n nonzero rational weights (whose negative
/// count is the index d_P) or the index given directly.
class FixedPoint {
public:
    explicit FixedPoint(int index);
    /// Throws std::domain_error on a zero weight (nondegeneracy violation).
    explicit FixedPoint(std::vector<Rational> weights);

    int index() const { return index_; }
    const std::optional<std::vector<Rational>>& weights() const { return weights_; }

    bool operator==(const FixedPoint& o) const {
        return index_ == o.index_ && weights_ == o.weights_;
    }

private:
    int index_ = 0;
    std::optional<std::vector<Rational>> weights_;
};

/// Nonempty list of fixed points of an action on an n-fold; indices lie in
/// 0..n and weight lists, when present, have exactly n entries.
class FixedPointData {
public:
    FixedPointData(int dimension, std::vector<FixedPoint> points);

    int dimension() const { return dimension_; }
    const std::vector<FixedPoint>& points() const { return points_; }

    bool operator==(const FixedPointData& o) const {
        return dimension_ == o.dimension_ && points_ == o.points_;
    }

private:
    int dimension_ = 0;
    std::vector<FixedPoint> points_;
};

/// The indices d_P (the moment-map Morse index is 2 d_P).
std::vector<int> morse_indices(const FixedPointData& data);

/// sum_P (-y)^{d_P}.
YPolynomial localized_chi_y(const FixedPointData& data);
/// The dual form sum_P (-y)^{n-d_P}.
YPolynomial localized_chi_y_dual(const FixedPointData& data);
/// sum_P y^{2 d_P}; a manifold carrying such an action has no odd homology
/// and torsion-free integral homology.
YPolynomial localized_poincare(const FixedPointData& data);

/// Optional companions for the obstruction battery. Checks lacking their
/// companion report not-applicable rather than failing.
struct ObstructionInputs {
    const HodgeDiamond* diamond = nullptr;
    const ChernNumbers* chern = nullptr;
    const BettiVector* betti = nullptr;
    int depth = 4;  // deepest Taylor combination compared in check (d)
};

/// Runs, in order: (a) localization duality, (b) chi_{-y^2} = P_y,
/// (c) signature = alternating sum of even Betti numbers, (d) Betti-determined
/// Chern combinations against supplied Chern numbers, (e) diamond Betti
/// numbers against the localized Poincare coefficients.
std::vector<ConstraintReport> hamiltonian_obstruction_report(
    const FixedPointData& data, const ObstructionInputs& inputs = {});

}  // namespace chiy
