#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liecubic/algebra.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/types.hpp"

namespace liecubic {

// Invariant indices follow the 1-based convention l_1 = h, l_{i+1} built
// from basis element A_i, so valid indices run over 1..n+1.

/// l_1 = h(r); l_{i+1} = (theta + ad*_Y xi)(A_i).
double invariant_l(const StructureConstants& sc, const ReducedState& r, std::size_t index);

/// All n+1 invariants in index order.
std::vector<double> invariant_values(const StructureConstants& sc, const ReducedState& r);

/// Differential of a function on O_eta × g × g*: a vector for the theta slot,
/// a covector for Y, a vector for xi.
struct Differential {
  AlgebraVector theta;
  AlgebraCovector y;
  AlgebraVector xi;
};

/// dl_{i+1} = (A_i, −ad*_{A_i} xi, ad_Y A_i) for index = i+1 in 2..n+1.
Differential grad_l(const StructureConstants& sc, const ReducedState& r, std::size_t index);

/// dh = (Y, theta, X_xi); used for index 1 in brackets.
Differential grad_h(const ReducedState& r);

/// X_{l_{j+1}} = (ad*_{A_j} theta, ad_Y A_j, ad*_{A_j} xi) for index = j+1 in
/// 2..n+1; index 1 returns X_h.
ReducedTangent hamiltonian_field_of_l(const StructureConstants& sc, const ReducedState& r, std::size_t index);

/// ⟨df, v⟩ for a differential and a tangent vector.
double apply(const Differential& df, const ReducedTangent& v);

/// {l_i, l_j} = dl_i(X_{l_j}).
double poisson_bracket_l(const StructureConstants& sc, const ReducedState& r, std::size_t i, std::size_t j);

/// sum_k C^k_{j-1,i-1} l_{k+1}(r), defined for i, j >= 2.
double structural_bracket_l(const StructureConstants& sc, const ReducedState& r, std::size_t i, std::size_t j);

/// (n+1)×(n+1) matrix of {l_i, l_j}.
Eigen::MatrixXd bracket_matrix(const StructureConstants& sc, const ReducedState& r);

/// Singular-value rank with cutoff `rel_tol` · σ_max.
std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-10);

struct RankResult {
  std::size_t r_g = 0;
  Eigen::VectorXd witness;
  std::size_t max_rank = 0;
};

inline constexpr std::uint64_t kRankSeed = 0xC0FFEE;

/// r_g = ½ max_a rank M(a), maximized over the canonical directions plus
/// `trials` uniform samples of the unit sphere (deterministic seed).
RankResult rank_rg(const StructureConstants& sc, std::size_t trials = 256, std::uint64_t seed = kRankSeed);

/// Orthonormal basis (columns) of the tangent space of the coadjoint orbit
/// through theta, i.e. the span of ad*_{A_i} theta.
Eigen::MatrixXd orbit_tangent_basis(const StructureConstants& sc, const AlgebraCovector& theta);

/// Half the dimension of the coadjoint orbit through eta.
std::size_t orbit_half_dim(const StructureConstants& sc, const AlgebraCovector& eta);

/// Jacobian of (l_1..l_{n+1}) in local coordinates: orbit tangent basis for
/// theta, then Y, then xi. Shape (n+1) × (2m + 2n).
Eigen::MatrixXd invariants_jacobian(const StructureConstants& sc, const ReducedState& r);

struct InvariantReport {
  std::string algebra_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r_g = 0;
  long lie_cartan_count = 0;
  long reduced_dim = 0;
  std::size_t phase_space_dim = 0;
  bool completely_integrable = false;  // m + r_g == 1
  bool trivial_orbit = false;          // m == 0
  Eigen::VectorXd rank_witness;
  std::vector<double> values;
  Eigen::MatrixXd bracket_matrix;
};

/// Fills the report at state r on the orbit of eta. Throws DomainError when
/// theta and eta are not on one orbit (Casimir mismatch above 1e-9).
InvariantReport lie_cartan_report(const Algebra& alg, const ReducedState& r, const AlgebraCovector& eta,
                                  std::size_t trials = 256);

/// Body-velocity derivatives at one instant.
struct VelocityJet {
  AlgebraVector y;
  AlgebraVector ydot;
  AlgebraVector yddot;
  AlgebraVector ydddot;
};

/// Jet from a reduced state: Ẏ = X_xi, Ÿ = −X_theta, Y⃛ = −[Y, Ÿ].
VelocityJet analytic_jet(const StructureConstants& sc, const ReducedState& r);

/// Jet at the centre of five uniform samples by central differences.
VelocityJet jet_from_samples(std::span<const AlgebraVector> window, double h);

struct ClassicalInvariants {
  double i1 = 0.0;
  double i2 = 0.0;
};

/// I_1 = ½⟨V₁,V₁⟩ − ⟨V₂,V⟩, I_2 = ⟨V₂,V₂⟩ − ⟨V₃,V₁⟩ with V = Y and
/// V_{k+1} = V̇_k + ½[Y, V_k] (covariant derivative of the bi-invariant metric).
ClassicalInvariants classical_invariants_I1_I2(const StructureConstants& sc, const VelocityJet& jet);

/// Window variant: needs at least five uniform samples, evaluates at the
/// centre sample.
ClassicalInvariants classical_invariants_I1_I2(const StructureConstants& sc, std::span<const AlgebraVector> window,
                                               double h);

}  // namespace liecubic
