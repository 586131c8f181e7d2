#pragma once

#include <functional>
#include <span>
#include <vector>

#include "liecubic/algebra.hpp"
#include "liecubic/full_dynamics.hpp"
#include "liecubic/group.hpp"
#include "liecubic/types.hpp"

namespace liecubic {

/// Point (theta, Y, xi) of O_eta × g × g*, theta stored extrinsically in g*.
struct ReducedState {
  AlgebraCovector theta;
  AlgebraVector y;
  AlgebraCovector xi;
};

struct ReducedTangent {
  AlgebraCovector theta;
  AlgebraVector y;
  AlgebraCovector xi;
};

struct ReducedTrajectory {
  std::vector<double> times;
  std::vector<ReducedState> states;
};

void validate(const StructureConstants& sc, const ReducedState& r);

/// Coadjoint-orbit invariants of a covector: its norm for every algebra,
/// plus the Pfaffian of its matrix for so4 and ½ tr(Θ⁴) for so5.
std::vector<double> casimir_monitors(const Algebra& alg, const AlgebraCovector& theta);

/// Largest absolute difference between the Casimir monitors of theta and eta.
double orbit_mismatch(const Algebra& alg, const AlgebraCovector& theta, const AlgebraCovector& eta);

/// Υ_eta: (x, Y, xi) ↦ (x, Y, Ad*_x eta + ad*_Y xi, xi), a point of J⁻¹(eta).
FullState embed_upsilon(const Algebra& alg, const GroupElement& x, const AlgebraVector& y, const AlgebraCovector& xi,
                        const AlgebraCovector& eta);

/// φ_eta on J⁻¹(eta): theta = mu − ad*_Y xi. Throws DomainError when
/// ‖J(s) − eta‖ exceeds `tol`.
ReducedState project_phi_eta(const Algebra& alg, const FullState& s, const AlgebraCovector& eta, double tol = 1e-8);

ReducedTrajectory project_trajectory(const Algebra& alg, const FullTrajectory& traj, const AlgebraCovector& eta,
                                     double tol = 1e-8);

/// h = theta(Y) + ½ xi(X_xi)
double reduced_hamiltonian_h(const ReducedState& r);

/// X_h = (ad*_Y theta, X_xi, −theta)
ReducedTangent vector_field_Xh(const StructureConstants& sc, const ReducedState& r);

struct ReducedOptions {
  /// Rescale theta to its initial norm after every step.
  bool renormalize = true;
};

/// RK4 on (theta, Y, xi).
ReducedTrajectory integrate_reduced(const Algebra& alg, const ReducedState& r0, double T, double h,
                                    ReducedOptions options = {});

using ReducedObserver = std::function<void(std::size_t, double, const ReducedState&)>;

/// Streaming form; the observer sees k = 0..steps.
void integrate_reduced(const Algebra& alg, const ReducedState& r0, double T, double h, const ReducedObserver& observe,
                       ReducedOptions options = {});

/// Max over interior windows of ‖Y⃛ + [Y, Ÿ]‖, derivatives from a four-point
/// stencil centred between consecutive samples (second order in h).
double euler_lagrange_residual(const StructureConstants& sc, std::span<const AlgebraVector> ys, double h);

}  // namespace liecubic
