#include "liecubic/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace liecubic {

namespace {

void require_index(const StructureConstants& sc, std::size_t index, std::size_t lowest, const char* what) {
  if (index < lowest || index > sc.dim() + 1) {
    throw ContractViolation(std::string(what) + ": index " + std::to_string(index) + " outside " +
                            std::to_string(lowest) + ".." + std::to_string(sc.dim() + 1));
  }
}

}  // namespace

double invariant_l(const StructureConstants& sc, const ReducedState& r, std::size_t index) {
  validate(sc, r);
  require_index(sc, index, 1, "invariant_l");
  if (index == 1) return reduced_hamiltonian_h(r);
  const AlgebraCovector mu = r.theta + ad_star(sc, r.y, r.xi);
  return mu[index - 2];
}

std::vector<double> invariant_values(const StructureConstants& sc, const ReducedState& r) {
  validate(sc, r);
  const AlgebraCovector mu = r.theta + ad_star(sc, r.y, r.xi);
  std::vector<double> out;
  out.reserve(sc.dim() + 1);
  out.push_back(reduced_hamiltonian_h(r));
  for (std::size_t i = 0; i < sc.dim(); ++i) out.push_back(mu[i]);
  return out;
}

Differential grad_l(const StructureConstants& sc, const ReducedState& r, std::size_t index) {
  validate(sc, r);
  require_index(sc, index, 2, "grad_l");
  const auto a = AlgebraVector::unit(sc.dim(), index - 2);
  return {a, -ad_star(sc, a, r.xi), bracket(sc, r.y, a)};
}

Differential grad_h(const ReducedState& r) { return {r.y, r.theta, sharp(r.xi)}; }

ReducedTangent hamiltonian_field_of_l(const StructureConstants& sc, const ReducedState& r, std::size_t index) {
  validate(sc, r);
  require_index(sc, index, 1, "hamiltonian_field_of_l");
  if (index == 1) return vector_field_Xh(sc, r);
  const auto a = AlgebraVector::unit(sc.dim(), index - 2);
  return {ad_star(sc, a, r.theta), bracket(sc, r.y, a), ad_star(sc, a, r.xi)};
}

double apply(const Differential& df, const ReducedTangent& v) {
  return pairing(v.theta, df.theta) + pairing(df.y, v.y) + pairing(v.xi, df.xi);
}

double poisson_bracket_l(const StructureConstants& sc, const ReducedState& r, std::size_t i, std::size_t j) {
  require_index(sc, i, 1, "poisson_bracket_l");
  require_index(sc, j, 1, "poisson_bracket_l");
  const Differential d = i == 1 ? grad_h(r) : grad_l(sc, r, i);
  return apply(d, hamiltonian_field_of_l(sc, r, j));
}

double structural_bracket_l(const StructureConstants& sc, const ReducedState& r, std::size_t i, std::size_t j) {
  require_index(sc, i, 2, "structural_bracket_l");
  require_index(sc, j, 2, "structural_bracket_l");
  const auto values = invariant_values(sc, r);
  double s = 0.0;
  for (std::size_t k = 0; k < sc.dim(); ++k) s += sc(j - 2, i - 2, k) * values[k + 1];
  return s;
}

Eigen::MatrixXd bracket_matrix(const StructureConstants& sc, const ReducedState& r) {
  const std::size_t size = sc.dim() + 1;
  std::vector<Differential> grads;
  std::vector<ReducedTangent> fields;
  grads.reserve(size);
  fields.reserve(size);
  for (std::size_t i = 1; i <= size; ++i) {
    grads.push_back(i == 1 ? grad_h(r) : grad_l(sc, r, i));
    fields.push_back(hamiltonian_field_of_l(sc, r, i));
  }
  const auto s = static_cast<Eigen::Index>(size);
  Eigen::MatrixXd b(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      b(i, j) = apply(grads[static_cast<std::size_t>(i)], fields[static_cast<std::size_t>(j)]);
  return b;
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  const double cutoff = rel_tol * sv[0];
  return static_cast<std::size_t>((sv.array() > cutoff).count());
}

RankResult rank_rg(const StructureConstants& sc, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ContractViolation("rank_rg: trials must be at least 1");
  const auto n = static_cast<Eigen::Index>(sc.dim());
  RankResult best;
  best.witness = Eigen::VectorXd::Unit(n, 0);
  auto consider = [&](const Eigen::VectorXd& a) {
    const std::size_t rk = numerical_rank(structure_matrix(sc, a));
    if (rk > best.max_rank) {
      best.max_rank = rk;
      best.witness = a;
    }
  };
  for (Eigen::Index k = 0; k < n; ++k) consider(Eigen::VectorXd::Unit(n, k));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    Eigen::VectorXd a(n);
    for (Eigen::Index k = 0; k < n; ++k) a[k] = normal(rng);
    const double len = a.norm();
    if (len == 0.0) continue;
    consider(a / len);
  }
  best.r_g = best.max_rank / 2;
  return best;
}

Eigen::MatrixXd orbit_tangent_basis(const StructureConstants& sc, const AlgebraCovector& theta) {
  require_dim(sc, theta.size(), "orbit_tangent_basis");
  const auto n = static_cast<Eigen::Index>(sc.dim());
  Eigen::MatrixXd spans(n, n);
  for (std::size_t i = 0; i < sc.dim(); ++i)
    spans.col(static_cast<Eigen::Index>(i)) = ad_star(sc, AlgebraVector::unit(sc.dim(), i), theta).coeffs();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(spans, Eigen::ComputeFullU);
  const Eigen::VectorXd sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) rank = (sv.array() > 1e-10 * sv[0]).count();
  return svd.matrixU().leftCols(rank);
}

std::size_t orbit_half_dim(const StructureConstants& sc, const AlgebraCovector& eta) {
  return static_cast<std::size_t>(orbit_tangent_basis(sc, eta).cols()) / 2;
}

Eigen::MatrixXd invariants_jacobian(const StructureConstants& sc, const ReducedState& r) {
  validate(sc, r);
  const Eigen::MatrixXd tangent = orbit_tangent_basis(sc, r.theta);
  const auto n = static_cast<Eigen::Index>(sc.dim());
  const Eigen::Index orbit_cols = tangent.cols();
  Eigen::MatrixXd jac(n + 1, orbit_cols + 2 * n);
  for (std::size_t i = 1; i <= sc.dim() + 1; ++i) {
    const Differential d = i == 1 ? grad_h(r) : grad_l(sc, r, i);
    const auto row = static_cast<Eigen::Index>(i - 1);
    jac.row(row).head(orbit_cols) = tangent.transpose() * d.theta.coeffs();
    jac.row(row).segment(orbit_cols, n) = d.y.coeffs().transpose();
    jac.row(row).tail(n) = d.xi.coeffs().transpose();
  }
  return jac;
}

InvariantReport lie_cartan_report(const Algebra& alg, const ReducedState& r, const AlgebraCovector& eta,
                                  std::size_t trials) {
  const auto& sc = alg.structure();
  validate(sc, r);
  require_dim(sc, eta.size(), "lie_cartan_report eta");
  const double mismatch = orbit_mismatch(alg, r.theta, eta);
  if (!(mismatch <= 1e-9 * std::max(1.0, eta.norm() * eta.norm())))
    throw DomainError("theta is not on the coadjoint orbit of eta (Casimir mismatch " + format_sci(mismatch) +
                      ")");

  InvariantReport rep;
  rep.algebra_id = alg.id();
  rep.n = sc.dim();
  rep.m = orbit_half_dim(sc, eta);
  const RankResult rank = rank_rg(sc, trials);
  rep.r_g = rank.r_g;
  rep.rank_witness = rank.witness;
  rep.lie_cartan_count = static_cast<long>(rep.n + 1) - static_cast<long>(rep.r_g);
  rep.reduced_dim = 2 * (static_cast<long>(rep.m) + static_cast<long>(rep.r_g) - 1);
  rep.phase_space_dim = 2 * (rep.n + rep.m);
  rep.completely_integrable = rep.m + rep.r_g == 1;
  rep.trivial_orbit = rep.m == 0;
  rep.values = invariant_values(sc, r);
  rep.bracket_matrix = bracket_matrix(sc, r);
  return rep;
}

VelocityJet analytic_jet(const StructureConstants& sc, const ReducedState& r) {
  validate(sc, r);
  const AlgebraVector yddot = -sharp(r.theta);
  return {r.y, sharp(r.xi), yddot, -bracket(sc, r.y, yddot)};
}

VelocityJet jet_from_samples(std::span<const AlgebraVector> window, double h) {
  if (window.size() < 5) throw ContractViolation("jet_from_samples: need at least 5 samples");
  if (!(h > 0.0)) throw ContractViolation("jet_from_samples: h must be positive");
  const std::size_t c = window.size() / 2;
  const auto& m2 = window[c - 2];
  const auto& m1 = window[c - 1];
  const auto& y0 = window[c];
  const auto& p1 = window[c + 1];
  const auto& p2 = window[c + 2];
  return {y0, (1.0 / (12.0 * h)) * (8.0 * (p1 - m1) - (p2 - m2)),
          (1.0 / (12.0 * h * h)) * (16.0 * (p1 + m1) - (p2 + m2) - 30.0 * y0),
          (0.5 / (h * h * h)) * ((p2 - m2) - 2.0 * (p1 - m1))};
}

ClassicalInvariants classical_invariants_I1_I2(const StructureConstants& sc, const VelocityJet& jet) {
  const auto& y = jet.y;
  const AlgebraVector v1 = jet.ydot;  // + ½[Y, Y] = 0
  const AlgebraVector v2 = jet.yddot + 0.5 * bracket(sc, y, v1);
  const AlgebraVector v2dot = jet.ydddot + 0.5 * (bracket(sc, jet.ydot, v1) + bracket(sc, y, jet.yddot));
  const AlgebraVector v3 = v2dot + 0.5 * bracket(sc, y, v2);
  return {0.5 * inner(v1, v1) - inner(v2, y), inner(v2, v2) - inner(v3, v1)};
}

ClassicalInvariants classical_invariants_I1_I2(const StructureConstants& sc, std::span<const AlgebraVector> window,
                                               double h) {
  return classical_invariants_I1_I2(sc, jet_from_samples(window, h));
}

}  // namespace liecubic
