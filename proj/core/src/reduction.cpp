#include "liecubic/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace liecubic {

void validate(const StructureConstants& sc, const ReducedState& r) {
  require_dim(sc, r.theta.size(), "reduced theta");
  require_dim(sc, r.y.size(), "reduced Y");
  require_dim(sc, r.xi.size(), "reduced xi");
}

std::vector<double> casimir_monitors(const Algebra& alg, const AlgebraCovector& theta) {
  require_dim(alg.structure(), theta.size(), "casimir_monitors");
  std::vector<double> out{theta.norm()};
  if (alg.id() == "so4") {
    const Eigen::MatrixXd m = alg.to_matrix(theta.coeffs());
    out.push_back(m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2));
  } else if (alg.id() == "so5") {
    const Eigen::MatrixXd m = alg.to_matrix(theta.coeffs());
    const Eigen::MatrixXd m2 = m * m;
    out.push_back(0.5 * (m2 * m2).trace());
  }
  return out;
}

double orbit_mismatch(const Algebra& alg, const AlgebraCovector& theta, const AlgebraCovector& eta) {
  const auto a = casimir_monitors(alg, theta);
  const auto b = casimir_monitors(alg, eta);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

FullState embed_upsilon(const Algebra& alg, const GroupElement& x, const AlgebraVector& y, const AlgebraCovector& xi,
                        const AlgebraCovector& eta) {
  const auto& sc = alg.structure();
  require_dim(sc, y.size(), "embed_upsilon Y");
  require_dim(sc, xi.size(), "embed_upsilon xi");
  require_dim(sc, eta.size(), "embed_upsilon eta");
  return {x, y, coadjoint_Ad_star(alg, x, eta) + ad_star(sc, y, xi), xi};
}

ReducedState project_phi_eta(const Algebra& alg, const FullState& s, const AlgebraCovector& eta, double tol) {
  validate(alg, s);
  require_dim(alg.structure(), eta.size(), "project_phi_eta eta");
  const double residual = (momentum_map_J(alg, s) - eta).norm();
  if (!(residual <= tol))
    throw DomainError("state is off the level set J^-1(eta): |J - eta| = " + format_sci(residual));
  return {s.mu - ad_star(alg.structure(), s.y, s.xi), s.y, s.xi};
}

ReducedTrajectory project_trajectory(const Algebra& alg, const FullTrajectory& traj, const AlgebraCovector& eta,
                                     double tol) {
  ReducedTrajectory out;
  out.times = traj.times;
  out.states.reserve(traj.states.size());
  for (const auto& s : traj.states) out.states.push_back(project_phi_eta(alg, s, eta, tol));
  return out;
}

double reduced_hamiltonian_h(const ReducedState& r) {
  return pairing(r.theta, r.y) + 0.5 * r.xi.coeffs().squaredNorm();
}

ReducedTangent vector_field_Xh(const StructureConstants& sc, const ReducedState& r) {
  return {ad_star(sc, r.y, r.theta), sharp(r.xi), -r.theta};
}

namespace {

ReducedState advance(const ReducedState& r, const ReducedTangent& k, double dt) {
  return {r.theta + dt * k.theta, r.y + dt * k.y, r.xi + dt * k.xi};
}

}  // namespace

void integrate_reduced(const Algebra& alg, const ReducedState& r0, double T, double h, const ReducedObserver& observe,
                       ReducedOptions options) {
  const auto& sc = alg.structure();
  validate(sc, r0);
  const std::size_t steps = step_count(T, h);
  const double radius = r0.theta.norm();

  ReducedState r = r0;
  observe(0, 0.0, r);
  for (std::size_t k = 1; k <= steps; ++k) {
    const ReducedTangent k1 = vector_field_Xh(sc, r);
    const ReducedTangent k2 = vector_field_Xh(sc, advance(r, k1, 0.5 * h));
    const ReducedTangent k3 = vector_field_Xh(sc, advance(r, k2, 0.5 * h));
    const ReducedTangent k4 = vector_field_Xh(sc, advance(r, k3, h));
    const double sixth = h / 6.0;
    r = ReducedState{r.theta + sixth * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta),
                     r.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
                     r.xi + sixth * (k1.xi + 2.0 * k2.xi + 2.0 * k3.xi + k4.xi)};
    if (!r.theta.all_finite() || !r.y.all_finite() || !r.xi.all_finite())
      throw IntegrationError("reduced dynamics: non-finite state", k);
    if (options.renormalize && radius > 0.0) {
      const double current = r.theta.norm();
      if (current > 0.0) r.theta *= radius / current;
    }
    observe(k, static_cast<double>(k) * h, r);
  }
}

ReducedTrajectory integrate_reduced(const Algebra& alg, const ReducedState& r0, double T, double h,
                                    ReducedOptions options) {
  ReducedTrajectory traj;
  traj.times.reserve(step_count(T, h) + 1);
  traj.states.reserve(step_count(T, h) + 1);
  integrate_reduced(
      alg, r0, T, h,
      [&](std::size_t, double t, const ReducedState& r) {
        traj.times.push_back(t);
        traj.states.push_back(r);
      },
      options);
  return traj;
}

double euler_lagrange_residual(const StructureConstants& sc, std::span<const AlgebraVector> ys, double h) {
  if (ys.size() < 4) throw ContractViolation("euler_lagrange_residual: need at least 4 samples");
  if (!(h > 0.0)) throw ContractViolation("euler_lagrange_residual: h must be positive");
  double worst = 0.0;
  for (std::size_t k = 0; k + 3 < ys.size(); ++k) {
    const auto& y0 = ys[k];
    const auto& y1 = ys[k + 1];
    const auto& y2 = ys[k + 2];
    const auto& y3 = ys[k + 3];
    // Midpoint t_{k+3/2}: value, second and third differences, all O(h²).
    const AlgebraVector y = (1.0 / 16.0) * (9.0 * (y1 + y2) - (y0 + y3));
    const AlgebraVector ydd = (0.5 / (h * h)) * ((y3 - y2) - (y1 - y0));
    const AlgebraVector yddd = (1.0 / (h * h * h)) * (y3 - 3.0 * y2 + 3.0 * y1 - y0);
    worst = std::max(worst, (yddd + bracket(sc, y, ydd)).norm());
  }
  return worst;
}

}  // namespace liecubic
