#pragma once

#include <cstdint>
#include <random>

#include "liecubic/algebra.hpp"
#include "liecubic/full_dynamics.hpp"
#include "liecubic/group.hpp"
#include "liecubic/reduction.hpp"

namespace liecubic {

/// Random generator used for every randomized state in the library, the
/// CLI and the tests; a fixed seed reproduces the same states.
using Rng = std::mt19937_64;

/// Coefficients uniform in [-scale, scale].
AlgebraVector random_vector(std::size_t n, Rng& rng, double scale = 1.0);
AlgebraCovector random_covector(std::size_t n, Rng& rng, double scale = 1.0);

/// exp of a random algebra element with coefficients in [-pi, pi].
GroupElement random_element(const Algebra& alg, Rng& rng);

FullState random_full_state(const Algebra& alg, Rng& rng);

/// Random (theta, Y, xi); theta is kept away from zero.
ReducedState random_reduced_state(const Algebra& alg, Rng& rng);

/// Random point of J⁻¹(eta) built through Υ_eta.
FullState random_level_set_state(const Algebra& alg, const AlgebraCovector& eta, Rng& rng);

}  // namespace liecubic
