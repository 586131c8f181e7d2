#include "liecubic/full_dynamics.hpp"

#include <cmath>

namespace liecubic {

void validate(const Algebra& alg, const FullState& s) {
  if (s.x.algebra_id != alg.id())
    throw ContractViolation("state group element belongs to '" + s.x.algebra_id + "', expected '" + alg.id() + "'");
  const auto& sc = alg.structure();
  require_dim(sc, s.y.size(), "state Y");
  require_dim(sc, s.mu.size(), "state mu");
  require_dim(sc, s.xi.size(), "state xi");
  const double r = membership_residual(alg, s.x);
  if (!(r <= 1e-9)) throw DomainError("state x is not in the group (residual " + format_sci(r) + ")");
}

double hamiltonian_H(const FullState& s) { return pairing(s.mu, s.y) + 0.5 * s.xi.coeffs().squaredNorm(); }

FullTangent vector_field_XH(const StructureConstants& sc, const FullState& s) {
  return {s.y, sharp(s.xi), AlgebraCovector::zero(sc.dim()), ad_star(sc, s.y, s.xi) - s.mu};
}

AlgebraCovector momentum_map_J(const Algebra& alg, const FullState& s) {
  const AlgebraCovector nu = s.mu - ad_star(alg.structure(), s.y, s.xi);
  // Ad*_{x^-1} nu has coefficients Ad_{x^-1}^T nu.
  return coadjoint_Ad_star(alg, inverse(alg, s.x), nu);
}

MomentumPair momenta_from_boundary_data(const StructureConstants& sc, const AlgebraVector& y,
                                        const AlgebraVector& ydot, const AlgebraVector& yddot) {
  require_dim(sc, y.size(), "boundary Y");
  require_dim(sc, ydot.size(), "boundary Ydot");
  require_dim(sc, yddot.size(), "boundary Yddot");
  return {flat(-yddot - bracket(sc, y, ydot)), flat(ydot)};
}

std::size_t step_count(double T, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ContractViolation("step size h must be positive and finite");
  if (!(T >= h) || !std::isfinite(T)) throw ContractViolation("horizon T must be finite and at least h");
  const double ratio = T / h;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * ratio) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::floor(ratio));
}

namespace {

// Left-trivialized dexp inverse truncated after the second-order term,
// enough for a fourth-order Munthe-Kaas method.
AlgebraVector dexpinv(const StructureConstants& sc, const AlgebraVector& theta, const AlgebraVector& v) {
  if (sc.is_abelian()) return v;
  const AlgebraVector tv = bracket(sc, theta, v);
  return v + 0.5 * tv + (1.0 / 12.0) * bracket(sc, theta, tv);
}

struct AlgebraRates {
  AlgebraVector y;
  AlgebraCovector xi;
};

AlgebraRates rates(const StructureConstants& sc, const AlgebraVector& y, const AlgebraCovector& mu,
                   const AlgebraCovector& xi) {
  return {sharp(xi), ad_star(sc, y, xi) - mu};
}

}  // namespace

FullState step_full(const Algebra& alg, const FullState& s, double h) {
  const auto& sc = alg.structure();
  const auto& mu = s.mu;

  const AlgebraVector y1 = s.y;
  const AlgebraCovector xi1 = s.xi;
  const AlgebraRates k1 = rates(sc, y1, mu, xi1);
  const AlgebraVector w1 = y1;

  const AlgebraVector y2 = s.y + (0.5 * h) * k1.y;
  const AlgebraCovector xi2 = s.xi + (0.5 * h) * k1.xi;
  const AlgebraRates k2 = rates(sc, y2, mu, xi2);
  const AlgebraVector w2 = dexpinv(sc, (0.5 * h) * w1, y2);

  const AlgebraVector y3 = s.y + (0.5 * h) * k2.y;
  const AlgebraCovector xi3 = s.xi + (0.5 * h) * k2.xi;
  const AlgebraRates k3 = rates(sc, y3, mu, xi3);
  const AlgebraVector w3 = dexpinv(sc, (0.5 * h) * w2, y3);

  const AlgebraVector y4 = s.y + h * k3.y;
  const AlgebraCovector xi4 = s.xi + h * k3.xi;
  const AlgebraRates k4 = rates(sc, y4, mu, xi4);
  const AlgebraVector w4 = dexpinv(sc, h * w3, y4);

  const double sixth = h / 6.0;
  FullState next;
  next.y = s.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
  next.xi = s.xi + sixth * (k1.xi + 2.0 * k2.xi + 2.0 * k3.xi + k4.xi);
  next.mu = s.mu;
  const AlgebraVector theta = sixth * (w1 + 2.0 * w2 + 2.0 * w3 + w4);
  if (!theta.all_finite()) {
    next.x = {Eigen::MatrixXd::Constant(s.x.mat.rows(), s.x.mat.cols(), std::nan("")), s.x.algebra_id};
    return next;
  }
  next.x = project_to_group(alg, multiply(s.x, exp_map(alg, theta)));
  return next;
}

void integrate_full(const Algebra& alg, const FullState& s0, double T, double h, const FullObserver& observe) {
  validate(alg, s0);
  const std::size_t steps = step_count(T, h);
  FullState s = s0;
  observe(0, 0.0, s);
  for (std::size_t k = 1; k <= steps; ++k) {
    s = step_full(alg, s, h);
    if (!s.y.all_finite() || !s.xi.all_finite() || !s.x.mat.allFinite())
      throw IntegrationError("full dynamics: non-finite state", k);
    observe(k, static_cast<double>(k) * h, s);
  }
}

FullTrajectory integrate_full(const Algebra& alg, const FullState& s0, double T, double h) {
  FullTrajectory traj;
  traj.times.reserve(step_count(T, h) + 1);
  traj.states.reserve(step_count(T, h) + 1);
  integrate_full(alg, s0, T, h, [&](std::size_t, double t, const FullState& s) {
    traj.times.push_back(t);
    traj.states.push_back(s);
  });
  return traj;
}

}  // namespace liecubic
