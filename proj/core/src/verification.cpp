#include "liecubic/verification.hpp"

#include <algorithm>
#include <cmath>

namespace liecubic {

ELState el_state_from_momenta(const StructureConstants& sc, const AlgebraVector& y, const AlgebraCovector& mu,
                              const AlgebraCovector& xi) {
  const AlgebraVector ydot = sharp(xi);
  return {y, ydot, -sharp(mu) - bracket(sc, y, ydot)};
}

namespace {

ELState el_rate(const StructureConstants& sc, const ELState& s) {
  return {s.ydot, s.yddot, -bracket(sc, s.y, s.yddot)};
}

ELState axpy(const ELState& s, const ELState& k, double a) {
  return {s.y + a * k.y, s.ydot + a * k.ydot, s.yddot + a * k.yddot};
}

}  // namespace

void integrate_euler_lagrange(const StructureConstants& sc, const ELState& s0, double T, double h,
                              const ELObserver& observe) {
  require_dim(sc, s0.y.size(), "EL Y");
  require_dim(sc, s0.ydot.size(), "EL Ydot");
  require_dim(sc, s0.yddot.size(), "EL Yddot");
  if (!(h > 0.0) || !(T >= h)) throw ContractViolation("integrate_euler_lagrange: need h > 0 and T >= h");
  const std::size_t steps = step_count(T, h);

  ELState s = s0;
  observe(0, 0.0, s);
  for (std::size_t k = 1; k <= steps; ++k) {
    const ELState k1 = el_rate(sc, s);
    const ELState k2 = el_rate(sc, axpy(s, k1, 0.5 * h));
    const ELState k3 = el_rate(sc, axpy(s, k2, 0.5 * h));
    const ELState k4 = el_rate(sc, axpy(s, k3, h));
    s = axpy(axpy(axpy(axpy(s, k1, h / 6.0), k2, h / 3.0), k3, h / 3.0), k4, h / 6.0);
    if (!s.y.all_finite() || !s.ydot.all_finite() || !s.yddot.all_finite())
      throw IntegrationError("Euler-Lagrange oracle: non-finite state", k);
    observe(k, static_cast<double>(k) * h, s);
  }
}

std::vector<ELState> integrate_euler_lagrange(const StructureConstants& sc, const ELState& s0, double T, double h) {
  std::vector<ELState> out;
  integrate_euler_lagrange(sc, s0, T, h, [&](std::size_t, double, const ELState& s) { out.push_back(s); });
  return out;
}

std::vector<GroupElement> reconstruct_group_path(const Algebra& alg, std::span<const AlgebraVector> ys,
                                                 const GroupElement& x0, double h) {
  std::vector<GroupElement> path;
  path.reserve(ys.size());
  path.push_back(x0);
  for (std::size_t k = 0; k + 1 < ys.size(); ++k)
    path.push_back(multiply(path.back(), exp_map(alg, 0.5 * (ys[k] + ys[k + 1]), h)));
  return path;
}

ReducedState chart_point(const Algebra& alg, const ReducedState& r, const ChartDirection& dir, double s) {
  const GroupElement g = exp_map(alg, dir.orbit_generator, s);
  return {coadjoint_Ad_star(alg, g, r.theta), r.y + s * dir.dy, r.xi + s * dir.dxi};
}

ReducedTangent chart_velocity(const StructureConstants& sc, const ReducedState& r, const ChartDirection& dir) {
  return {ad_star(sc, dir.orbit_generator, r.theta), dir.dy, dir.dxi};
}

double fd_directional_derivative(const Algebra& alg, const std::function<double(const ReducedState&)>& f,
                                 const ReducedState& r, const ChartDirection& dir, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("finite difference step must be positive");
  return (f(chart_point(alg, r, dir, eps)) - f(chart_point(alg, r, dir, -eps))) / (2.0 * eps);
}

double fd_gradient_error(const Algebra& alg, const ReducedState& r, std::size_t index, const ChartDirection& dir,
                         double eps) {
  const auto& sc = alg.structure();
  const auto f = [&](const ReducedState& p) { return invariant_l(sc, p, index); };
  const Differential d = index == 1 ? grad_h(r) : grad_l(sc, r, index);
  return std::abs(fd_directional_derivative(alg, f, r, dir, eps) - apply(d, chart_velocity(sc, r, dir)));
}

Differential fd_gradient_flat(const StructureConstants& sc, const ReducedState& r, std::size_t index, double eps) {
  if (!(eps > 0.0)) throw ContractViolation("finite difference step must be positive");
  const std::size_t n = sc.dim();
  Differential d{AlgebraVector::zero(n), AlgebraCovector::zero(n), AlgebraVector::zero(n)};
  auto central = [&](auto&& perturb) {
    ReducedState plus = r;
    ReducedState minus = r;
    perturb(plus, eps);
    perturb(minus, -eps);
    return (invariant_l(sc, plus, index) - invariant_l(sc, minus, index)) / (2.0 * eps);
  };
  for (std::size_t i = 0; i < n; ++i) {
    d.theta[i] = central([i](ReducedState& p, double e) { p.theta[i] += e; });
    d.y[i] = central([i](ReducedState& p, double e) { p.y[i] += e; });
    d.xi[i] = central([i](ReducedState& p, double e) { p.xi[i] += e; });
  }
  return d;
}

double fd_check_hamiltonian_field(const Algebra& alg, const ReducedState& r, double eps) {
  const auto& sc = alg.structure();
  const std::size_t n = sc.dim();
  std::vector<ChartDirection> probes;
  probes.push_back({r.y, sharp(r.xi), -r.theta});  // X_h
  for (std::size_t j = 0; j < n; ++j) {
    const auto a = AlgebraVector::unit(n, j);
    probes.push_back({a, bracket(sc, r.y, a), ad_star(sc, a, r.xi)});  // X_{l_{j+2}}
  }
  const auto h = [](const ReducedState& p) { return reduced_hamiltonian_h(p); };
  double worst = 0.0;
  for (const auto& dir : probes) worst = std::max(worst, std::abs(fd_directional_derivative(alg, h, r, dir, eps)));
  return worst;
}

double xtheta_yddot_residual(std::span<const ReducedState> samples, double h) {
  if (samples.size() < 3) throw ContractViolation("xtheta_yddot_residual: need at least 3 samples");
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < samples.size(); ++k) {
    const AlgebraVector yddot =
        (1.0 / (h * h)) * (samples[k + 1].y - 2.0 * samples[k].y + samples[k - 1].y);
    worst = std::max(worst, (sharp(samples[k].theta) + yddot).norm());
  }
  return worst;
}

}  // namespace liecubic
