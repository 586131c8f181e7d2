#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "liecubic/algebra.hpp"
#include "liecubic/group.hpp"
#include "liecubic/types.hpp"

namespace liecubic {

/// Left-trivialized phase point (x, Y, mu, xi) of G × g × g* × g*.
struct FullState {
  GroupElement x;
  AlgebraVector y;
  AlgebraCovector mu;
  AlgebraCovector xi;
};

/// X_H at a state. `x_body` is the body-frame velocity of x (ẋ = x · x_body).
struct FullTangent {
  AlgebraVector x_body;
  AlgebraVector y;
  AlgebraCovector mu;
  AlgebraCovector xi;
};

struct FullTrajectory {
  std::vector<double> times;
  std::vector<FullState> states;
};

/// Throws ContractViolation unless x belongs to `alg` and all algebra parts
/// have dimension n.
void validate(const Algebra& alg, const FullState& s);

/// H = mu(Y) + ½ xi(X_xi). Does not depend on x.
double hamiltonian_H(const FullState& s);

/// (Y, X_xi, 0, −mu + ad*_Y xi)
FullTangent vector_field_XH(const StructureConstants& sc, const FullState& s);

/// J = Ad*_{x^-1}(mu − ad*_Y xi).
AlgebraCovector momentum_map_J(const Algebra& alg, const FullState& s);

/// Body velocity data (Y, Ẏ, Ÿ) mapped to the covectors of the Hamiltonian
/// chart: xi = flat(Ẏ), mu = flat(−Ÿ − [Y, Ẏ]).
struct MomentumPair {
  AlgebraCovector mu;
  AlgebraCovector xi;
};
MomentumPair momenta_from_boundary_data(const StructureConstants& sc, const AlgebraVector& y,
                                        const AlgebraVector& ydot, const AlgebraVector& yddot);

/// Number of uniform steps of size h covering [0, T]; T/h is rounded to the
/// nearest integer when within 1e-9 relative, otherwise truncated.
std::size_t step_count(double T, double h);

/// Classical RK4 on (Y, mu, xi) with the group factor advanced by a fourth
/// order Munthe-Kaas update x ← x · exp(Θ), Θ assembled from the RK4 stages
/// through the truncated dexp⁻¹ series. x is projected back onto the group
/// after each step; mu is never touched.
FullTrajectory integrate_full(const Algebra& alg, const FullState& s0, double T, double h);

/// Called with (step index, time, state) for k = 0..steps.
using FullObserver = std::function<void(std::size_t, double, const FullState&)>;

/// Same scheme, streaming each sample to the observer instead of storing it.
void integrate_full(const Algebra& alg, const FullState& s0, double T, double h, const FullObserver& observe);

/// One step of the scheme above.
FullState step_full(const Algebra& alg, const FullState& s, double h);

}  // namespace liecubic
