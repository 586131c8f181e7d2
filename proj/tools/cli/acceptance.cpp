#include "cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iterator>
#include <limits>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "cli/commands.hpp"
#include "liecubic/algebra.hpp"
#include "liecubic/full_dynamics.hpp"
#include "liecubic/invariants.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/sampling.hpp"
#include "liecubic/verification.hpp"

namespace liecubic::cli {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget;
  Outcome (*run)(std::uint64_t seed);
};

Rng rng_for(std::uint64_t seed, int criterion, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(k)};
  return Rng(seq);
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// Appends "label value (<= bound)" and folds the check into the outcome.
void check_max(Outcome& out, const std::string& label, double value, double bound) {
  const bool ok = value <= bound;
  out.ok = out.ok && ok;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += label + " " + sci(value) + (ok ? " <= " : " > ") + sci(bound);
}

void check_min(Outcome& out, const std::string& label, double value, double bound) {
  const bool ok = value >= bound;
  out.ok = out.ok && ok;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += label + " " + fixed(value) + (ok ? " >= " : " < ") + fixed(bound);
}

double sup_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// 1. Structure constants of every catalog algebra.
Outcome algebra_validity(std::uint64_t) {
  Outcome out;
  for (const auto& id : catalog_ids()) {
    const auto res = catalog(id).structure().validate();
    check_max(out, id, std::max({res.antisymmetry, res.jacobi, res.ad_invariance}), 1e-12);
  }
  return out;
}

// 2. Counting on so(3) at a generic orbit.
Outcome so3_counting(std::uint64_t seed) {
  const Algebra alg = catalog("so3");
  Rng rng = rng_for(seed, 2, 0);
  AlgebraCovector eta = random_covector(3, rng);
  while (eta.norm() < 0.25) eta = random_covector(3, rng);
  const GroupElement x = random_element(alg, rng);
  const ReducedState r{coadjoint_Ad_star(alg, x, eta), random_vector(3, rng), random_covector(3, rng)};
  const InvariantReport rep = lie_cartan_report(alg, r, eta);
  Outcome out;
  out.ok = rep.n == 3 && rep.phase_space_dim == 8 && rep.m == 1 && rep.r_g == 1 && rep.lie_cartan_count == 3 &&
           rep.reduced_dim == 2;
  out.detail = "n=" + std::to_string(rep.n) + " dim=" + std::to_string(rep.phase_space_dim) +
               " m=" + std::to_string(rep.m) + " r_g=" + std::to_string(rep.r_g) +
               " count=" + std::to_string(rep.lie_cartan_count) + " reduced_dim=" + std::to_string(rep.reduced_dim) +
               " (expected 3 8 1 1 3 2)";
  return out;
}

struct Drift {
  double h_rel = 0.0;
  double j = 0.0;
  bool mu_exact = true;
};

Drift full_drift(const Algebra& alg, const FullState& s0, double T, double h) {
  const double h0 = hamiltonian_H(s0);
  const AlgebraCovector j0 = momentum_map_J(alg, s0);
  Drift d;
  integrate_full(alg, s0, T, h, [&](std::size_t, double, const FullState& s) {
    d.h_rel = std::max(d.h_rel, std::abs(hamiltonian_H(s) - h0) / std::max(1.0, std::abs(h0)));
    d.j = std::max(d.j, (momentum_map_J(alg, s) - j0).norm());
    d.mu_exact = d.mu_exact && s.mu == s0.mu;
  });
  return d;
}

const char* const kConservationAlgebras[] = {"so3", "su2", "so4"};

// 3. Conservation of H, J and mu along the full flow. The order is taken
// from the ensemble drift of each algebra, sum over seeds at h against h/2.
Outcome full_conservation(std::uint64_t seed) {
  Outcome out;
  double worst_h = 0.0, worst_j = 0.0, order_h = 99.0, order_j = 99.0;
  bool mu_exact = true;
  std::uint64_t k = 0;
  for (const char* id : kConservationAlgebras) {
    const Algebra alg = catalog(id);
    double coarse_h = 0.0, fine_h = 0.0, coarse_j = 0.0, fine_j = 0.0;
    for (int s = 0; s < 20; ++s, ++k) {
      Rng rng = rng_for(seed, 3, k);
      const FullState s0 = random_full_state(alg, rng);
      const Drift d = full_drift(alg, s0, 10.0, 1e-3);
      worst_h = std::max(worst_h, d.h_rel);
      worst_j = std::max(worst_j, d.j);
      mu_exact = mu_exact && d.mu_exact;
      const Drift coarse = full_drift(alg, s0, 10.0, 5e-3);
      const Drift fine = full_drift(alg, s0, 10.0, 2.5e-3);
      coarse_h += coarse.h_rel;
      fine_h += fine.h_rel;
      coarse_j += coarse.j;
      fine_j += fine.j;
    }
    order_h = std::min(order_h, std::log2(coarse_h / fine_h));
    order_j = std::min(order_j, std::log2(coarse_j / fine_j));
  }
  check_max(out, "H relative drift", worst_h, 1e-8);
  check_max(out, "|J(t)-J(0)|", worst_j, 1e-8);
  out.ok = out.ok && mu_exact;
  out.detail += mu_exact ? "; mu bit-exact" : "; mu changed";
  check_min(out, "order H", order_h, 3.5);
  check_min(out, "order J", order_j, 3.5);
  return out;
}

// 4. Conservation of l_1..l_{n+1} and the orbit norm along the reduced flow.
Outcome reduced_conservation(std::uint64_t seed) {
  Outcome out;
  double worst_l = 0.0, worst_c = 0.0;
  std::uint64_t k = 0;
  for (const char* id : kConservationAlgebras) {
    const Algebra alg = catalog(id);
    const auto& sc = alg.structure();
    for (int s = 0; s < 20; ++s, ++k) {
      Rng rng = rng_for(seed, 4, k);
      const FullState s0 = random_full_state(alg, rng);
      const ReducedState r0 = project_phi_eta(alg, s0, momentum_map_J(alg, s0));
      const auto l0 = invariant_values(sc, r0);
      const double c0 = r0.theta.norm();
      integrate_reduced(alg, r0, 10.0, 1e-3, [&](std::size_t, double, const ReducedState& r) {
        const auto l = invariant_values(sc, r);
        for (std::size_t i = 0; i < l.size(); ++i) worst_l = std::max(worst_l, std::abs(l[i] - l0[i]));
        worst_c = std::max(worst_c, std::abs(r.theta.norm() - c0));
      });
    }
  }
  check_max(out, "max |l_i(t)-l_i(0)|", worst_l, 1e-8);
  check_max(out, "Casimir drift", worst_c, 1e-9);
  return out;
}

// 5. Projection of the full flow against the reduced flow of the projection.
Outcome commuting_diagram(std::uint64_t seed) {
  const Algebra alg = catalog("so3");
  const double T = 10.0, h = 1e-3;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    Rng rng = rng_for(seed, 5, k);
    const AlgebraCovector eta = random_covector(3, rng);
    const FullState s0 = random_level_set_state(alg, eta, rng);
    const ReducedTrajectory projected =
        project_trajectory(alg, integrate_full(alg, s0, T, h), eta, std::numeric_limits<double>::infinity());
    const ReducedTrajectory reduced = integrate_reduced(alg, project_phi_eta(alg, s0, eta), T, h);
    for (std::size_t i = 0; i < reduced.states.size(); ++i) {
      const auto& a = projected.states[i];
      const auto& b = reduced.states[i];
      worst = std::max({worst, sup_diff(a.theta.coeffs(), b.theta.coeffs()), sup_diff(a.y.coeffs(), b.y.coeffs()),
                        sup_diff(a.xi.coeffs(), b.xi.coeffs())});
    }
  }
  Outcome out;
  check_max(out, "sup |pi(full) - reduced|", worst, 10.0 * std::pow(h, 4) * T);
  return out;
}

// 6. Y from the Hamiltonian flow against the third-order Euler-Lagrange oracle.
Outcome hamilton_vs_euler_lagrange(std::uint64_t seed) {
  const double T = 5.0, h = 1e-3;
  Outcome out;
  std::uint64_t k = 0;
  for (const char* id : {"so3", "so4"}) {
    const Algebra alg = catalog(id);
    const auto& sc = alg.structure();
    const std::size_t n = alg.dim();
    double worst = 0.0;
    for (int s = 0; s < 10; ++s, ++k) {
      Rng rng = rng_for(seed, 6, k);
      const GroupElement x0 = random_element(alg, rng);
      const ELState el0{random_vector(n, rng), random_vector(n, rng), random_vector(n, rng)};
      const MomentumPair m = momenta_from_boundary_data(sc, el0.y, el0.ydot, el0.yddot);
      std::vector<AlgebraVector> ys;
      integrate_full(alg, FullState{x0, el0.y, m.mu, m.xi}, T, h,
                     [&](std::size_t, double, const FullState& st) { ys.push_back(st.y); });
      integrate_euler_lagrange(sc, el0, T, h, [&](std::size_t i, double, const ELState& st) {
        worst = std::max(worst, sup_diff(ys[i].coeffs(), st.y.coeffs()));
      });
    }
    check_max(out, std::string(id) + " sup |Y_H - Y_EL|", worst, 10.0 * std::pow(h, 4) * T);
  }
  return out;
}

// 7. Pairing bracket against the structure-constant formula.
Outcome bracket_isomorphism(std::uint64_t seed) {
  Outcome out;
  std::uint64_t k = 0;
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const auto& sc = alg.structure();
    const std::size_t n = alg.dim();
    double worst_struct = 0.0, worst_h = 0.0;
    for (int s = 0; s < 200; ++s, ++k) {
      Rng rng = rng_for(seed, 7, k);
      const ReducedState r = random_reduced_state(alg, rng);
      const Eigen::MatrixXd b = bracket_matrix(sc, r);
      for (std::size_t i = 2; i <= n + 1; ++i)
        for (std::size_t j = 2; j <= n + 1; ++j)
          worst_struct = std::max(worst_struct, std::abs(b(static_cast<Eigen::Index>(i - 1),
                                                           static_cast<Eigen::Index>(j - 1)) -
                                                         structural_bracket_l(sc, r, i, j)));
      worst_h = std::max({worst_h, b.row(0).cwiseAbs().maxCoeff(), b.col(0).cwiseAbs().maxCoeff()});
    }
    check_max(out, id + " {l_i,l_j}", worst_struct, 1e-10);
    check_max(out, id + " {l_1,l_j}", worst_h, 1e-10);
  }
  return out;
}

// 8. Row rank of the invariants' Jacobian on O_eta x g x g*.
Outcome independence(std::uint64_t seed) {
  Outcome out;
  std::uint64_t k = 0;
  for (const char* id : {"so3", "su2", "so4", "so5"}) {
    const Algebra alg = catalog(id);
    double worst = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 100; ++s, ++k) {
      Rng rng = rng_for(seed, 8, k);
      const ReducedState r = random_reduced_state(alg, rng);
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(invariants_jacobian(alg.structure(), r)).singularValues();
      worst = std::min(worst, sv[sv.size() - 1] / sv[0]);
    }
    if (!out.detail.empty()) out.detail += "; ";
    const bool ok = worst > 1e-8;
    out.ok = out.ok && ok;
    out.detail += std::string(id) + " min sigma ratio " + sci(worst) + (ok ? " > " : " <= ") + sci(1e-8);
  }
  return out;
}

// 9. Classical invariants I1, I2 against h and the l_i.
Outcome classical_identities(std::uint64_t seed) {
  Outcome out;
  double worst1 = 0.0, worst2 = 0.0;
  std::uint64_t k = 0;
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const auto& sc = alg.structure();
    for (int s = 0; s < 100; ++s, ++k) {
      Rng rng = rng_for(seed, 9, k);
      const ReducedState r = random_reduced_state(alg, rng);
      const ClassicalInvariants inv = classical_invariants_I1_I2(sc, analytic_jet(sc, r));
      const auto l = invariant_values(sc, r);
      double sum_sq = 0.0;
      for (std::size_t i = 1; i < l.size(); ++i) sum_sq += l[i] * l[i];
      const double theta_x_theta = pairing(r.theta, sharp(r.theta));
      worst1 = std::max(worst1, std::abs(inv.i1 - l[0]));
      worst2 = std::max(worst2, std::abs(2.0 * inv.i2 - sum_sq - theta_x_theta));
    }
  }
  check_max(out, "|I1 - l_1|", worst1, 1e-10);
  check_max(out, "|2 I2 - sum l^2 - theta(X_theta)|", worst2, 1e-10);
  return out;
}

// 10. Second-order convergence of central differences along orbit charts.
Outcome gradient_check(std::uint64_t seed) {
  Outcome out;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, worst_small = 0.0;
  std::uint64_t k = 0;
  for (const char* id : {"so3", "su2", "so4", "so5"}) {
    const Algebra alg = catalog(id);
    const std::size_t n = alg.dim();
    for (int s = 0; s < 50; ++s, ++k) {
      Rng rng = rng_for(seed, 10, k);
      const ReducedState r = random_reduced_state(alg, rng);
      const ChartDirection dir{random_vector(n, rng), random_vector(n, rng), random_covector(n, rng)};
      double coarse = 0.0, fine = 0.0;
      for (std::size_t i = 2; i <= n + 1; ++i) {
        coarse += fd_gradient_error(alg, r, i, dir, 1e-2);
        fine += fd_gradient_error(alg, r, i, dir, 5e-3);
        worst_small = std::max(worst_small, fd_gradient_error(alg, r, i, dir, 1e-5));
      }
      lo = std::min(lo, coarse / fine);
      hi = std::max(hi, coarse / fine);
    }
  }
  check_min(out, "min error ratio", lo, 3.5);
  const bool ok = hi <= 4.5;
  out.ok = out.ok && ok;
  out.detail += "; max error ratio " + fixed(hi) + (ok ? " <= " : " > ") + fixed(4.5);
  check_max(out, "error at eps=1e-5", worst_small, 1e-8);
  return out;
}

// 11. abelian3: closed-form polynomial motion and vanishing brackets.
Outcome abelian_degeneration(std::uint64_t seed) {
  const Algebra alg = catalog("abelian3");
  const auto& sc = alg.structure();
  const Eigen::Index last = static_cast<Eigen::Index>(alg.rep_dim()) - 1;
  const double T = 10.0, h = 1e-3;
  double worst_y = 0.0, worst_x = 0.0, worst_b = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    Rng rng = rng_for(seed, 11, k);
    const FullState s0 = random_full_state(alg, rng);
    const Eigen::VectorXd y0 = s0.y.coeffs(), v = s0.xi.coeffs(), a = -s0.mu.coeffs();
    const Eigen::VectorXd p0 = s0.x.mat.col(last).head(last);
    integrate_full(alg, s0, T, h, [&](std::size_t, double t, const FullState& s) {
      const Eigen::VectorXd y = y0 + t * v + (0.5 * t * t) * a;
      const Eigen::VectorXd p = p0 + t * y0 + (0.5 * t * t) * v + (t * t * t / 6.0) * a;
      worst_y = std::max(worst_y, sup_diff(s.y.coeffs(), y));
      worst_x = std::max(worst_x, sup_diff(s.x.mat.col(last).head(last), p));
    });
    worst_b = std::max(worst_b, bracket_matrix(sc, random_reduced_state(alg, rng)).cwiseAbs().maxCoeff());
  }
  Outcome out;
  check_max(out, "Y vs quadratic", worst_y, 1e-10);
  check_max(out, "x vs cubic", worst_x, 1e-10);
  check_max(out, "brackets", worst_b, 1e-12);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 12. Two identical simulate runs write identical bytes.
Outcome determinism(std::uint64_t seed) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("liecubic-determinism-" + std::to_string(::getpid()) + "-" + std::to_string(seed));
  fs::create_directories(dir);
  Outcome out;
  int case_no = 0;
  for (const char* mode : {"full", "reduced", "euler-lagrange"}) {
    for (const char* format : {"jsonl", "csv"}) {
      RunConfig cfg;
      cfg.algebra = "so3";
      cfg.mode = mode;
      cfg.format = format;
      cfg.T = 1.0;
      cfg.h = 1e-3;
      cfg.seed = seed;
      std::ostringstream err;
      std::string bytes[2];
      int codes[2];
      cfg.output = (dir / ("run" + std::to_string(case_no))).string();
      for (int rep = 0; rep < 2; ++rep) {
        codes[rep] = cmd_simulate(cfg, err);
        bytes[rep] = slurp(cfg.output);
      }
      const bool same = codes[0] == 0 && codes[1] == 0 && !bytes[0].empty() && bytes[0] == bytes[1];
      out.ok = out.ok && same;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += std::string(mode) + "/" + format + (same ? " identical" : " differ") + " (" +
                    std::to_string(bytes[0].size()) + " bytes)";
      ++case_no;
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return out;
}

const Criterion kCriteria[] = {
    {1, "algebra validity", 1.0, algebra_validity},
    {2, "so(3) counting", 1.0, so3_counting},
    {3, "full conservation", 30.0, full_conservation},
    {4, "reduced conservation", 30.0, reduced_conservation},
    {5, "commuting diagram", 30.0, commuting_diagram},
    {6, "Hamiltonian vs Euler-Lagrange", 30.0, hamilton_vs_euler_lagrange},
    {7, "bracket isomorphism", 10.0, bracket_isomorphism},
    {8, "independence", 10.0, independence},
    {9, "classical invariants", 5.0, classical_identities},
    {10, "gradient order", 5.0, gradient_check},
    {11, "abelian degeneration", 5.0, abelian_degeneration},
    {12, "determinism", 0.0, determinism},
};

CriterionResult run_one(const Criterion& c, std::uint64_t seed) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run(seed);
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.ok && (c.budget == 0.0 || r.seconds < c.budget);
  r.detail = o.detail;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  std::vector<const Criterion*> chosen;
  for (const auto& c : kCriteria)
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), c.id) != options.only.end())
      chosen.push_back(&c);

  std::vector<CriterionResult> results;
  if (!options.parallel) {
    for (const auto* c : chosen) results.push_back(run_one(*c, options.seed));
    return results;
  }
  std::vector<std::future<CriterionResult>> pending;
  for (const auto* c : chosen) pending.push_back(std::async(std::launch::async, run_one, *c, options.seed));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << std::setw(2) << r.id << ' ' << r.name << ": " << r.detail << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.budget_seconds > 0.0) os << ", limit " << std::setprecision(0) << r.budget_seconds << " s";
  os << ')';
  return os.str();
}

}  // namespace liecubic::cli
