// Shared fixtures for the unit and acceptance suites: the printed coefficient
// tables (used as golden oracles), standard diamonds, and seeded random
// diamond generators.
#pragma once

#include "chiy/chern_polynomial.hpp"
#include "chiy/hodge.hpp"
#include "chiy/rational.hpp"

#include <random>
#include <vector>

namespace chiy::testsupport {

HodgeDiamond p2_diamond();
HodgeDiamond k3_diamond();
HodgeDiamond enriques_diamond();
/// n = 1 torus: every Hodge number 1.
HodgeDiamond torus_diamond();

/// The printed a_i table (valid for n >= 4), assembled term by term so that
/// colliding Chern monomials merge the way the printed formula means.
ChernPolynomial printed_taylor(int n, int i);
/// The printed h(p^m) table (valid for n >= 4), m <= 4.
ChernPolynomial printed_moment(int n, int m);

/// Serre- and conjugation-symmetric diamond with positive diagonal; when
/// `pure` is false at least one off-diagonal entry is forced nonzero.
HodgeDiamond random_kaehler_diamond(std::mt19937_64& rng, int n, bool pure);
/// Mirror-symmetric Kaehler diamond (n must be even).
HodgeDiamond random_mirror_diamond(std::mt19937_64& rng, int n);

/// e_1..e_m of an explicit rational tuple.
std::vector<Rational> elementary_values(const std::vector<Rational>& xs);

}  // namespace chiy::testsupport
