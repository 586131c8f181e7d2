#pragma once

// Independent oracles. The integrators here share nothing with
// full_dynamics/reduction apart from the algebra primitives.

#include <functional>
#include <span>
#include <vector>

#include "liecubic/algebra.hpp"
#include "liecubic/group.hpp"
#include "liecubic/invariants.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/types.hpp"

namespace liecubic {

/// (Y, Ẏ, Ÿ) for the third-order system Y⃛ + [Y, Ÿ] = 0.
struct ELState {
  AlgebraVector y;
  AlgebraVector ydot;
  AlgebraVector yddot;
};

/// Ẏ = X_xi, Ÿ = −X_mu − [Y, X_xi].
ELState el_state_from_momenta(const StructureConstants& sc, const AlgebraVector& y, const AlgebraCovector& mu,
                              const AlgebraCovector& xi);

/// RK4 on the first-order form of Y⃛ = −[Y, Ÿ]; returns one sample per step
/// including t = 0.
std::vector<ELState> integrate_euler_lagrange(const StructureConstants& sc, const ELState& s0, double T, double h);

using ELObserver = std::function<void(std::size_t, double, const ELState&)>;

void integrate_euler_lagrange(const StructureConstants& sc, const ELState& s0, double T, double h,
                              const ELObserver& observe);

/// x_{k+1} = x_k · exp(h (Y_k + Y_{k+1}) / 2).
std::vector<GroupElement> reconstruct_group_path(const Algebra& alg, std::span<const AlgebraVector> ys,
                                                 const GroupElement& x0, double h);

/// Direction in the local chart of O_eta × g × g*: theta moves along the
/// orbit as Ad*_{exp(sZ)} theta, Y and xi move linearly.
struct ChartDirection {
  AlgebraVector orbit_generator;
  AlgebraVector dy;
  AlgebraCovector dxi;
};

ReducedState chart_point(const Algebra& alg, const ReducedState& r, const ChartDirection& dir, double s);

/// Velocity of the chart curve at s = 0: (ad*_Z theta, dY, dxi).
ReducedTangent chart_velocity(const StructureConstants& sc, const ReducedState& r, const ChartDirection& dir);

/// Central difference (f(c(ε)) − f(c(−ε))) / 2ε along the chart curve.
double fd_directional_derivative(const Algebra& alg, const std::function<double(const ReducedState&)>& f,
                                 const ReducedState& r, const ChartDirection& dir, double eps);

/// |FD derivative of l_index along dir − dl_index(chart velocity)|.
double fd_gradient_error(const Algebra& alg, const ReducedState& r, std::size_t index, const ChartDirection& dir,
                         double eps);

/// Coordinate-wise central differences of l_index in (theta, Y, xi).
Differential fd_gradient_flat(const StructureConstants& sc, const ReducedState& r, std::size_t index, double eps);

/// Max over the probe fields {X_h, X_{l_2}, ..., X_{l_{n+1}}} of the central
/// difference derivative of h along each field's chart curve; zero up to
/// O(ε²) when X_h is the Hamiltonian field of h for these brackets.
double fd_check_hamiltonian_field(const Algebra& alg, const ReducedState& r, double eps = 1e-5);

/// Max over interior samples of ‖X_theta + Ÿ‖ with Ÿ from a three-point
/// central difference.
double xtheta_yddot_residual(std::span<const ReducedState> samples, double h);

}  // namespace liecubic
