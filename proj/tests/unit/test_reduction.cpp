#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "liecubic/invariants.hpp"
#include "liecubic/reduction.hpp"
#include "support.hpp"

namespace liecubic {
namespace {

using testing::coeffs_near;
using testing::vec;

TEST(EmbedUpsilon, AtIdentityWithZeroVelocityMuIsEta) {
  const Algebra alg = catalog("so3");
  const AlgebraCovector eta{0.1, 0.2, -0.3};
  const FullState s = embed_upsilon(alg, identity(alg), AlgebraVector::zero(3), AlgebraCovector{1, 2, 3}, eta);
  EXPECT_TRUE(coeffs_near(s.mu, eta.coeffs(), 0.0));
}

TEST(EmbedUpsilon, LandsOnTheLevelSet) {
  Rng rng(61);
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const std::size_t n = alg.dim();
    const auto eta = random_covector(n, rng);
    const FullState s = embed_upsilon(alg, random_element(alg, rng), random_vector(n, rng), random_covector(n, rng), eta);
    EXPECT_TRUE(coeffs_near(momentum_map_J(alg, s), eta.coeffs(), 1e-13)) << id;
  }
}

TEST(EmbedUpsilon, So3RotatedCovector) {
  const Algebra alg = catalog("so3");
  const GroupElement x = exp_map(alg, AlgebraVector::unit(3, 0), std::numbers::pi / 2);
  const FullState s = embed_upsilon(alg, x, AlgebraVector::zero(3), AlgebraCovector::zero(3), AlgebraCovector::unit(3, 2));
  // Ad_x is the rotation itself on so(3) coefficients, so Ad*_x e³ = xᵀ e³.
  const Eigen::VectorXd want = x.mat.transpose() * vec({0, 0, 1});
  EXPECT_TRUE(coeffs_near(s.mu, want, 1e-15));
  EXPECT_TRUE(coeffs_near(s.mu, vec({0, 1, 0}), 1e-15));
}

TEST(EmbedUpsilon, EquivariantUnderIsotropy) {
  // g = exp(s·sharp(eta)) fixes eta, so left translation by g leaves mu unchanged.
  const Algebra alg = catalog("so3");
  Rng rng(62);
  for (int t = 0; t < 20; ++t) {
    const auto eta = random_covector(3, rng);
    const GroupElement g = exp_map(alg, sharp(eta), 0.9);
    ASSERT_TRUE(coeffs_near(coadjoint_Ad_star(alg, inverse(alg, g), eta), eta.coeffs(), 1e-14));
    const GroupElement x = random_element(alg, rng);
    const auto y = random_vector(3, rng);
    const auto xi = random_covector(3, rng);
    const FullState a = embed_upsilon(alg, x, y, xi, eta);
    const FullState b = embed_upsilon(alg, multiply(g, x), y, xi, eta);
    EXPECT_TRUE(coeffs_near(b.mu, a.mu.coeffs(), 1e-13));
    const FullState c = embed_upsilon(alg, multiply(x, g), y, xi, eta);
    EXPECT_TRUE(coeffs_near(c.mu - ad_star(alg.structure(), y, xi),
                            coadjoint_Ad_star(alg, g, a.mu - ad_star(alg.structure(), y, xi)).coeffs(), 1e-13));
  }
}

TEST(ProjectPhiEta, InvertsTheEmbedding) {
  Rng rng(63);
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const std::size_t n = alg.dim();
    const auto eta = random_covector(n, rng);
    const GroupElement x = random_element(alg, rng);
    const auto y = random_vector(n, rng);
    const auto xi = random_covector(n, rng);
    const ReducedState r = project_phi_eta(alg, embed_upsilon(alg, x, y, xi, eta), eta);
    EXPECT_TRUE(coeffs_near(r.theta, coadjoint_Ad_star(alg, x, eta).coeffs(), 1e-13)) << id;
    EXPECT_EQ(r.y, y);
    EXPECT_EQ(r.xi, xi);
  }
}

TEST(ProjectPhiEta, AtIdentityThetaIsEta) {
  const Algebra alg = catalog("so4");
  Rng rng(64);
  const auto eta = random_covector(6, rng);
  const auto y = random_vector(6, rng);
  const auto xi = random_covector(6, rng);
  const FullState s{identity(alg), y, eta + ad_star(alg.structure(), y, xi), xi};
  EXPECT_TRUE(coeffs_near(project_phi_eta(alg, s, eta).theta, eta.coeffs(), 1e-15));
}

TEST(ProjectPhiEta, RejectsStatesOffTheLevelSet) {
  const Algebra alg = catalog("so3");
  Rng rng(65);
  const auto eta = random_covector(3, rng);
  FullState s = random_level_set_state(alg, eta, rng);
  s.mu[0] += 1e-3;
  try {
    project_phi_eta(alg, s, eta);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("e-"), std::string::npos) << e.what();
  }
}

TEST(ReducedHamiltonian, Examples) {
  EXPECT_EQ(reduced_hamiltonian_h({AlgebraCovector::zero(3), AlgebraVector{1, 2, 3}, AlgebraCovector::zero(3)}), 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(reduced_hamiltonian_h({AlgebraCovector::unit(3, i), AlgebraVector::unit(3, i), AlgebraCovector::zero(3)}),
              1.0);
}

TEST(ReducedHamiltonian, EqualsFullHamiltonianThroughProjection) {
  Rng rng(66);
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const auto eta = random_covector(alg.dim(), rng);
    const FullState s = random_level_set_state(alg, eta, rng);
    EXPECT_NEAR(reduced_hamiltonian_h(project_phi_eta(alg, s, eta)), hamiltonian_H(s), 1e-13) << id;
  }
}

TEST(VectorFieldXh, Examples) {
  const auto& sc = catalog("so3").structure();
  const ReducedTangent zero = vector_field_Xh(sc, {AlgebraCovector::zero(3), AlgebraVector{1, 2, 3}, AlgebraCovector::zero(3)});
  EXPECT_EQ(zero.theta.max_abs() + zero.y.max_abs() + zero.xi.max_abs(), 0.0);

  const ReducedTangent v = vector_field_Xh(sc, {AlgebraCovector::unit(3, 2), AlgebraVector::unit(3, 0), AlgebraCovector::zero(3)});
  EXPECT_TRUE(coeffs_near(v.theta, vec({0, 1, 0}), 0.0));
  EXPECT_EQ(v.y.max_abs(), 0.0);
  EXPECT_TRUE(coeffs_near(v.xi, vec({0, 0, -1}), 0.0));

  Rng rng(67);
  for (const auto& id : catalog_ids()) {
    const auto& s = catalog(id).structure();
    const auto theta = random_covector(s.dim(), rng);
    EXPECT_LE(vector_field_Xh(s, {theta, sharp(theta), random_covector(s.dim(), rng)}).theta.max_abs(), 1e-15) << id;
  }
}

TEST(IntegrateReduced, ZeroStateStaysZero) {
  const Algebra alg = catalog("so3");
  const ReducedState r0{AlgebraCovector::zero(3), AlgebraVector::zero(3), AlgebraCovector::zero(3)};
  for (const auto& r : integrate_reduced(alg, r0, 1.0, 1e-2).states)
    EXPECT_EQ(r.theta.max_abs() + r.y.max_abs() + r.xi.max_abs(), 0.0);
}

TEST(IntegrateReduced, ConservesInvariantsAndCasimirs) {
  // Moderate data: h·|Y| stays small over the horizon.
  Rng rng(68);
  for (const auto& id : {"so3", "su2", "so4", "so5"}) {
    const Algebra alg = catalog(id);
    const auto& sc = alg.structure();
    const std::size_t n = alg.dim();
    const ReducedState r0{random_covector(n, rng, 0.05), random_vector(n, rng, 0.5), random_covector(n, rng, 0.2)};
    const auto l0 = invariant_values(sc, r0);
    const auto c0 = casimir_monitors(alg, r0.theta);
    double dl = 0.0, dc = 0.0;
    integrate_reduced(alg, r0, 10.0, 1e-3, [&](std::size_t, double, const ReducedState& r) {
      const auto l = invariant_values(sc, r);
      for (std::size_t i = 0; i < l.size(); ++i) dl = std::max(dl, std::abs(l[i] - l0[i]));
      const auto c = casimir_monitors(alg, r.theta);
      for (std::size_t i = 0; i < c.size(); ++i) dc = std::max(dc, std::abs(c[i] - c0[i]));
    });
    EXPECT_LE(dl, 1e-8) << id;
    EXPECT_LE(dc, 1e-9) << id;
  }
}

TEST(IntegrateReduced, RenormalizationHoldsOrbitNormExactly) {
  const Algebra alg = catalog("so4");
  Rng rng(69);
  const ReducedState r0 = random_reduced_state(alg, rng);
  const double norm0 = r0.theta.norm();
  for (const auto& r : integrate_reduced(alg, r0, 2.0, 1e-2).states) EXPECT_NEAR(r.theta.norm(), norm0, 1e-14);
  const auto raw = integrate_reduced(alg, r0, 2.0, 1e-2, ReducedOptions{false});
  EXPECT_GT(std::abs(raw.states.back().theta.norm() - norm0), 0.0);
}

TEST(IntegrateReduced, ProjectedFullTrajectorySatisfiesReducedEquations) {
  const Algebra alg = catalog("so3");
  Rng rng(70);
  const auto eta = random_covector(3, rng);
  const FullState s0 = random_level_set_state(alg, eta, rng);
  const double h = 1e-3;
  const ReducedTrajectory proj = project_trajectory(alg, integrate_full(alg, s0, 1.0, h), eta);
  // Central difference of the projected samples against X_h.
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < proj.states.size(); ++k) {
    const auto& a = proj.states[k - 1];
    const auto& b = proj.states[k + 1];
    const ReducedTangent v = vector_field_Xh(alg.structure(), proj.states[k]);
    worst = std::max({worst, ((1.0 / (2 * h)) * (b.theta - a.theta) - v.theta).max_abs(),
                      ((1.0 / (2 * h)) * (b.y - a.y) - v.y).max_abs(),
                      ((1.0 / (2 * h)) * (b.xi - a.xi) - v.xi).max_abs()});
  }
  EXPECT_LE(worst, 1e-5);
}

TEST(IntegrateReduced, MatchesProjectedFullFlowWithSmallData) {
  const Algebra alg = catalog("so3");
  Rng rng(71);
  const AlgebraCovector eta = random_covector(3, rng, 0.05);
  const FullState s0 =
      embed_upsilon(alg, random_element(alg, rng), random_vector(3, rng, 0.5), random_covector(3, rng, 0.2), eta);
  const double T = 10.0, h = 1e-3;
  const auto proj = project_trajectory(alg, integrate_full(alg, s0, T, h), eta, 1e-6);
  const auto red = integrate_reduced(alg, project_phi_eta(alg, s0, eta), T, h);
  double worst = 0.0;
  for (std::size_t k = 0; k < red.states.size(); ++k)
    worst = std::max({worst, sup_distance(proj.states[k].theta, red.states[k].theta),
                      sup_distance(proj.states[k].y, red.states[k].y), sup_distance(proj.states[k].xi, red.states[k].xi)});
  EXPECT_LE(worst, 10 * std::pow(h, 4) * T);
}

TEST(CasimirMonitors, InvariantUnderCoadjointAction) {
  Rng rng(72);
  for (const auto& id : catalog_ids()) {
    const Algebra alg = catalog(id);
    const auto theta = random_covector(alg.dim(), rng);
    const auto moved = coadjoint_Ad_star(alg, random_element(alg, rng), theta);
    const auto a = casimir_monitors(alg, theta), b = casimir_monitors(alg, moved);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(a.size(), id == std::string("so4") || id == std::string("so5") ? 2u : 1u) << id;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12) << id;
    EXPECT_LE(orbit_mismatch(alg, theta, moved), 1e-12) << id;
  }
}

TEST(CasimirMonitors, So4PfaffianSeparatesOrbitsOfEqualNorm) {
  const Algebra alg = catalog("so4");
  // Same norm, opposite Pfaffian sign: different orbits.
  AlgebraCovector a = AlgebraCovector::zero(6), b = AlgebraCovector::zero(6);
  // Basis order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3): indices 0 and 5 are disjoint planes.
  a[0] = 1.0;
  a[5] = 1.0;
  b[0] = 1.0;
  b[5] = -1.0;
  EXPECT_NEAR(a.norm(), b.norm(), 0.0);
  EXPECT_GT(orbit_mismatch(alg, a, b), 0.5);
}

TEST(EulerLagrangeResidual, GeodesicAndAbelianCasesVanish) {
  const Algebra so3 = catalog("so3");
  Rng rng(73);
  const ReducedState geodesic{AlgebraCovector::zero(3), random_vector(3, rng), AlgebraCovector::zero(3)};
  const auto g = integrate_reduced(so3, geodesic, 0.1, 1e-2);
  std::vector<AlgebraVector> ys;
  for (const auto& r : g.states) ys.push_back(r.y);
  EXPECT_EQ(euler_lagrange_residual(so3.structure(), ys, 1e-2), 0.0);

  const Algebra ab = catalog("abelian3");
  const auto a = integrate_reduced(ab, random_reduced_state(ab, rng), 0.5, 1e-2);
  ys.clear();
  for (const auto& r : a.states) ys.push_back(r.y);
  EXPECT_LE(euler_lagrange_residual(ab.structure(), ys, 1e-2), 1e-9);
  EXPECT_THROW(euler_lagrange_residual(ab.structure(), std::span(ys).first(3), 1e-2), ContractViolation);
}

TEST(EulerLagrangeResidual, ConvergesAtLeastQuadratically) {
  const Algebra alg = catalog("so3");
  Rng rng(74);
  const ReducedState r0 = random_reduced_state(alg, rng);
  double res[2];
  for (int i = 0; i < 2; ++i) {
    const double h = 1e-2 / (1 << i);
    std::vector<AlgebraVector> ys;
    for (const auto& r : integrate_reduced(alg, r0, 1.0, h).states) ys.push_back(r.y);
    res[i] = euler_lagrange_residual(alg.structure(), ys, h);
  }
  EXPECT_GE(res[0] / res[1], 3.5);
}

}  // namespace
}  // namespace liecubic
