#include <gtest/gtest.h>

#include <cmath>

#include "liecubic/invariants.hpp"
#include "liecubic/sampling.hpp"
#include "liecubic/verification.hpp"
#include "support.hpp"

namespace liecubic {
namespace {

using testing::coeffs_near;
using testing::vec;

ReducedState zero_velocity(std::size_t n, const AlgebraCovector& theta) {
  return {theta, AlgebraVector::zero(n), AlgebraCovector::zero(n)};
}

TEST(InvariantL, AtZeroVelocityAreThetaComponents) {
  const auto& sc = catalog("so3").structure();
  const ReducedState r = zero_velocity(3, AlgebraCovector{0.3, -0.2, 0.7});
  EXPECT_EQ(invariant_l(sc, r, 1), 0.0);
  EXPECT_EQ(invariant_l(sc, r, 2), 0.3);
  EXPECT_EQ(invariant_l(sc, r, 3), -0.2);
  EXPECT_EQ(invariant_l(sc, r, 4), 0.7);
  EXPECT_THROW(invariant_l(sc, r, 0), ContractViolation);
  EXPECT_THROW(invariant_l(sc, r, 5), ContractViolation);
}

TEST(InvariantL, ValuesMatchSingleEvaluations) {
  Rng rng(81);
  const Algebra alg = catalog("so5");
  const ReducedState r = random_reduced_state(alg, rng);
  const auto values = invariant_values(alg.structure(), r);
  ASSERT_EQ(values.size(), 11u);
  for (std::size_t i = 1; i <= 11; ++i) EXPECT_EQ(values[i - 1], invariant_l(alg.structure(), r, i));
}

TEST(InvariantL, EqualsMomentumComponentsOfTheRotatedFullState) {
  // With x = identity, l_{i+1} is the i-th component of mu.
  Rng rng(82);
  const Algebra alg = catalog("so4");
  const auto eta = random_covector(6, rng);
  const FullState s{identity(alg), random_vector(6, rng), AlgebraCovector::zero(6), random_covector(6, rng)};
  FullState on = embed_upsilon(alg, s.x, s.y, s.xi, eta);
  const auto l = invariant_values(alg.structure(), project_phi_eta(alg, on, eta));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(l[i + 1], on.mu[i], 1e-15);
}

TEST(GradL, Examples) {
  const auto& sc = catalog("so3").structure();
  const ReducedState r0 = zero_velocity(3, AlgebraCovector{1, 2, 3});
  for (std::size_t i = 0; i < 3; ++i) {
    const Differential d = grad_l(sc, r0, i + 2);
    EXPECT_EQ(d.theta, AlgebraVector::unit(3, i));
    EXPECT_EQ(d.y.max_abs(), 0.0);
    EXPECT_EQ(d.xi.max_abs(), 0.0);
  }
  const ReducedState r{AlgebraCovector{1, 2, 3}, AlgebraVector::unit(3, 1), AlgebraCovector::zero(3)};
  EXPECT_TRUE(coeffs_near(grad_l(sc, r, 2).xi, vec({0, 0, -1}), 0.0));
  EXPECT_THROW(grad_l(sc, r, 1), ContractViolation);
}

TEST(GradL, MatchesCoordinateFiniteDifferences) {
  Rng rng(83);
  for (const auto& id : catalog_ids()) {
    const auto& sc = catalog(id).structure();
    for (int t = 0; t < 5; ++t) {
      const ReducedState r{random_covector(sc.dim(), rng), random_vector(sc.dim(), rng), random_covector(sc.dim(), rng)};
      for (std::size_t i = 2; i <= sc.dim() + 1; ++i) {
        const Differential a = grad_l(sc, r, i);
        const Differential fd = fd_gradient_flat(sc, r, i, 1e-5);
        EXPECT_TRUE(coeffs_near(a.theta, fd.theta.coeffs(), 1e-8)) << id << " l" << i;
        EXPECT_TRUE(coeffs_near(a.y, fd.y.coeffs(), 1e-8)) << id << " l" << i;
        EXPECT_TRUE(coeffs_near(a.xi, fd.xi.coeffs(), 1e-8)) << id << " l" << i;
      }
      const Differential h = grad_h(r);
      const Differential fd = fd_gradient_flat(sc, r, 1, 1e-5);
      EXPECT_TRUE(coeffs_near(h.theta, fd.theta.coeffs(), 1e-8)) << id;
      EXPECT_TRUE(coeffs_near(h.y, fd.y.coeffs(), 1e-8)) << id;
      EXPECT_TRUE(coeffs_near(h.xi, fd.xi.coeffs(), 1e-8)) << id;
    }
  }
}

TEST(HamiltonianFieldOfL, AbelianFieldsVanish) {
  Rng rng(84);
  const Algebra alg = catalog("abelian4");
  const ReducedState r = random_reduced_state(alg, rng);
  for (std::size_t i = 2; i <= 5; ++i) {
    const ReducedTangent v = hamiltonian_field_of_l(alg.structure(), r, i);
    EXPECT_EQ(v.theta.max_abs() + v.y.max_abs() + v.xi.max_abs(), 0.0);
  }
}

TEST(HamiltonianFieldOfL, So3Example) {
  const auto& sc = catalog("so3").structure();
  const ReducedTangent v = hamiltonian_field_of_l(sc, zero_velocity(3, AlgebraCovector::unit(3, 0)), 4);
  EXPECT_TRUE(coeffs_near(v.theta, vec({0, -1, 0}), 0.0));
  EXPECT_EQ(v.y.max_abs() + v.xi.max_abs(), 0.0);
}

TEST(HamiltonianFieldOfL, IndexOneIsXh) {
  Rng rng(85);
  const Algebra alg = catalog("su2");
  const ReducedState r = random_reduced_state(alg, rng);
  const ReducedTangent a = hamiltonian_field_of_l(alg.structure(), r, 1);
  const ReducedTangent b = vector_field_Xh(alg.structure(), r);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.xi, b.xi);
}

TEST(PoissonBracket, HCommutesWithEveryInvariant) {
  Rng rng(86);
  for (const auto& id : catalog_ids()) {
    const auto& sc = catalog(id).structure();
    const ReducedState r{random_covector(sc.dim(), rng), random_vector(sc.dim(), rng), random_covector(sc.dim(), rng)};
    for (std::size_t j = 1; j <= sc.dim() + 1; ++j) {
      EXPECT_NEAR(poisson_bracket_l(sc, r, 1, j), 0.0, 1e-13) << id << " j=" << j;
      EXPECT_NEAR(poisson_bracket_l(sc, r, j, 1), 0.0, 1e-13) << id << " j=" << j;
    }
  }
}

TEST(PoissonBracket, MatchesStructureConstants) {
  Rng rng(87);
  for (const auto& id : catalog_ids()) {
    const auto& sc = catalog(id).structure();
    const ReducedState r{random_covector(sc.dim(), rng), random_vector(sc.dim(), rng), random_covector(sc.dim(), rng)};
    const Eigen::MatrixXd b = bracket_matrix(sc, r);
    EXPECT_LE((b + b.transpose()).cwiseAbs().maxCoeff(), 1e-13) << id;
    for (std::size_t i = 2; i <= sc.dim() + 1; ++i)
      for (std::size_t j = 2; j <= sc.dim() + 1; ++j) {
        const double want = structural_bracket_l(sc, r, i, j);
        EXPECT_NEAR(poisson_bracket_l(sc, r, i, j), want, 1e-12) << id << " " << i << "," << j;
        EXPECT_NEAR(b(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)), want, 1e-12);
      }
  }
}

TEST(PoissonBracket, So3ExampleAtZeroVelocity) {
  // {l_2, l_3} = C^k_{2,1} l_{k+1} = -l_4 in the cyclic basis.
  const auto& sc = catalog("so3").structure();
  const ReducedState r = zero_velocity(3, AlgebraCovector{0.0, 0.0, 2.0});
  EXPECT_NEAR(poisson_bracket_l(sc, r, 2, 3), -2.0, 1e-15);
  EXPECT_NEAR(poisson_bracket_l(sc, r, 3, 2), 2.0, 1e-15);
}

TEST(RankRg, KnownAlgebras) {
  EXPECT_EQ(rank_rg(catalog("so3").structure()).r_g, 1u);
  EXPECT_EQ(rank_rg(catalog("su2").structure()).r_g, 1u);
  EXPECT_EQ(rank_rg(catalog("so4").structure()).r_g, 2u);
  EXPECT_EQ(rank_rg(catalog("so5").structure()).r_g, 4u);
  EXPECT_EQ(rank_rg(catalog("abelian3").structure()).r_g, 0u);
  const RankResult r = rank_rg(catalog("so4").structure());
  EXPECT_EQ(r.max_rank, 4u);
  EXPECT_EQ(numerical_rank(structure_matrix(catalog("so4").structure(), r.witness)), 4u);
  EXPECT_THROW(rank_rg(catalog("so3").structure(), 0), ContractViolation);
}

TEST(RankRg, IsDeterministic) {
  const auto& sc = catalog("so5").structure();
  const RankResult a = rank_rg(sc), b = rank_rg(sc);
  EXPECT_EQ(a.r_g, b.r_g);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(OrbitHalfDim, GenericAndTrivialOrbits) {
  Rng rng(88);
  EXPECT_EQ(orbit_half_dim(catalog("so3").structure(), random_covector(3, rng)), 1u);
  EXPECT_EQ(orbit_half_dim(catalog("so4").structure(), random_covector(6, rng)), 2u);
  EXPECT_EQ(orbit_half_dim(catalog("so5").structure(), random_covector(10, rng)), 4u);
  EXPECT_EQ(orbit_half_dim(catalog("so3").structure(), AlgebraCovector::zero(3)), 0u);
  EXPECT_EQ(orbit_half_dim(catalog("abelian3").structure(), random_covector(3, rng)), 0u);
  // A single-plane covector has nonzero parts in both so3 factors.
  EXPECT_EQ(orbit_half_dim(catalog("so4").structure(), AlgebraCovector::unit(6, 0)), 2u);
}

TEST(InvariantsJacobian, FullRankOnGenericStates) {
  Rng rng(89);
  for (const char* id : {"so3", "su2", "so4", "so5"}) {
    const Algebra alg = catalog(id);
    const ReducedState r = random_reduced_state(alg, rng);
    const Eigen::MatrixXd jac = invariants_jacobian(alg.structure(), r);
    EXPECT_EQ(jac.rows(), static_cast<Eigen::Index>(alg.dim() + 1));
    EXPECT_EQ(numerical_rank(jac, 1e-8), alg.dim() + 1) << id;
  }
}

TEST(LieCartanReport, So3) {
  Rng rng(90);
  const Algebra alg = catalog("so3");
  const ReducedState r = random_reduced_state(alg, rng);
  const InvariantReport rep = lie_cartan_report(alg, r, r.theta);
  EXPECT_EQ(rep.n, 3u);
  EXPECT_EQ(rep.m, 1u);
  EXPECT_EQ(rep.r_g, 1u);
  EXPECT_EQ(rep.lie_cartan_count, 3);
  EXPECT_EQ(rep.reduced_dim, 2);
  EXPECT_EQ(rep.phase_space_dim, 8u);
  EXPECT_FALSE(rep.completely_integrable);
  EXPECT_FALSE(rep.trivial_orbit);
  EXPECT_EQ(rep.values.size(), 4u);
}

TEST(LieCartanReport, AbelianAndSo4) {
  Rng rng(91);
  const Algebra ab = catalog("abelian3");
  const ReducedState ra = random_reduced_state(ab, rng);
  const InvariantReport a = lie_cartan_report(ab, ra, ra.theta);
  EXPECT_EQ(a.m, 0u);
  EXPECT_EQ(a.r_g, 0u);
  EXPECT_EQ(a.lie_cartan_count, 4);
  EXPECT_EQ(a.reduced_dim, -2);
  EXPECT_TRUE(a.trivial_orbit);
  EXPECT_EQ(a.bracket_matrix.cwiseAbs().maxCoeff(), 0.0);

  const Algebra so4 = catalog("so4");
  const ReducedState r4 = random_reduced_state(so4, rng);
  const InvariantReport b = lie_cartan_report(so4, r4, coadjoint_Ad_star(so4, random_element(so4, rng), r4.theta));
  EXPECT_EQ(b.n, 6u);
  EXPECT_EQ(b.m, 2u);
  EXPECT_EQ(b.r_g, 2u);
  EXPECT_EQ(b.lie_cartan_count, 5);
  EXPECT_EQ(b.reduced_dim, 6);
  EXPECT_EQ(b.phase_space_dim, 16u);
}

TEST(LieCartanReport, RejectsThetaOffTheOrbit) {
  Rng rng(92);
  const Algebra alg = catalog("so3");
  const ReducedState r = random_reduced_state(alg, rng);
  EXPECT_THROW(lie_cartan_report(alg, r, 2.0 * r.theta), DomainError);
}

TEST(ClassicalInvariants, IdentitiesOnAnalyticJets) {
  Rng rng(93);
  for (const auto& id : catalog_ids()) {
    const auto& sc = catalog(id).structure();
    for (int t = 0; t < 10; ++t) {
      const ReducedState r{random_covector(sc.dim(), rng), random_vector(sc.dim(), rng), random_covector(sc.dim(), rng)};
      const ClassicalInvariants inv = classical_invariants_I1_I2(sc, analytic_jet(sc, r));
      const auto l = invariant_values(sc, r);
      double sum_sq = 0.0;
      for (std::size_t i = 1; i < l.size(); ++i) sum_sq += l[i] * l[i];
      EXPECT_NEAR(inv.i1, l[0], 1e-12) << id;
      EXPECT_NEAR(2.0 * inv.i2, sum_sq + r.theta.norm() * r.theta.norm(), 1e-12) << id;
    }
  }
}

TEST(ClassicalInvariants, GeodesicCase) {
  // theta = 0, xi = 0: Y is constant, so every covariant derivative vanishes.
  const auto& sc = catalog("so3").structure();
  const ReducedState r{AlgebraCovector::zero(3), AlgebraVector{1, 2, 3}, AlgebraCovector::zero(3)};
  const ClassicalInvariants inv = classical_invariants_I1_I2(sc, analytic_jet(sc, r));
  EXPECT_EQ(inv.i1, 0.0);
  EXPECT_EQ(inv.i2, 0.0);
}

TEST(JetFromSamples, ExactOnCubicPolynomials) {
  const double h = 0.1;
  std::vector<AlgebraVector> window;
  for (int k = -2; k <= 2; ++k) {
    const double t = k * h;
    window.push_back(AlgebraVector{1 + 2 * t + 3 * t * t + 4 * t * t * t, -t * t * t, 5.0});
  }
  const VelocityJet jet = jet_from_samples(window, h);
  EXPECT_TRUE(coeffs_near(jet.y, vec({1, 0, 5}), 1e-14));
  EXPECT_TRUE(coeffs_near(jet.ydot, vec({2, 0, 0}), 1e-12));
  EXPECT_TRUE(coeffs_near(jet.yddot, vec({6, 0, 0}), 1e-10));
  EXPECT_TRUE(coeffs_near(jet.ydddot, vec({24, -6, 0}), 1e-9));
  EXPECT_THROW(jet_from_samples(std::span(window).first(4), h), ContractViolation);
  EXPECT_THROW(jet_from_samples(window, 0.0), ContractViolation);
}

TEST(ClassicalInvariants, ConservedAlongSampledTrajectories) {
  Rng rng(94);
  const Algebra alg = catalog("so3");
  const ReducedState r0 = random_reduced_state(alg, rng);
  const double h = 1e-3;
  std::vector<AlgebraVector> ys;
  for (const auto& r : integrate_reduced(alg, r0, 1.0, h).states) ys.push_back(r.y);
  const ClassicalInvariants first = classical_invariants_I1_I2(alg.structure(), std::span(ys).first(5), h);
  const ClassicalInvariants last = classical_invariants_I1_I2(alg.structure(), std::span(ys).last(5), h);
  EXPECT_NEAR(first.i1, last.i1, 1e-5);
  EXPECT_NEAR(first.i2, last.i2, 1e-5);
}

}  // namespace
}  // namespace liecubic
