#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "liecubic/types.hpp"

namespace liecubic {

/// Structure constants C^k_{ij} of a Lie algebra over an orthonormal basis,
/// [A_i, A_j] = sum_k C^k_{ij} A_k. Immutable once built.
class StructureConstants {
 public:
  /// `c` is laid out as c[(i * n + j) * n + k] = C^k_{ij}.
  StructureConstants(std::size_t n, std::vector<double> c);

  static StructureConstants abelian(std::size_t n);

  std::size_t dim() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  /// Matrix of ad_{A_i} acting on coefficient vectors: entry (k, j) is C^k_{ij}.
  const Eigen::MatrixXd& ad_basis(std::size_t i) const { return ad_[i]; }

  bool is_abelian() const noexcept { return abelian_; }

  struct Residuals {
    double antisymmetry = 0.0;   // max |C^k_ij + C^k_ji|
    double jacobi = 0.0;         // max |cyclic sum|
    double ad_invariance = 0.0;  // max |C^k_ij + C^j_ik|
  };
  Residuals validate() const;

 private:
  std::size_t n_;
  std::vector<double> c_;
  std::vector<Eigen::MatrixXd> ad_;
  bool abelian_ = true;
};

void require_dim(const StructureConstants& sc, std::size_t got, const char* what);

AlgebraVector bracket(const StructureConstants& sc, const AlgebraVector& y, const AlgebraVector& z);

/// ad*_Y xi, fixed by (ad*_Y xi)(Z) = xi([Y, Z]).
AlgebraCovector ad_star(const StructureConstants& sc, const AlgebraVector& y, const AlgebraCovector& xi);

/// Matrix of ad_Y on coefficient vectors.
Eigen::MatrixXd ad_matrix(const StructureConstants& sc, const AlgebraVector& y);

/// M_ij(a) = sum_k C^k_ij a_k.
Eigen::MatrixXd structure_matrix(const StructureConstants& sc, const Eigen::VectorXd& a);

// The basis is orthonormal, so the musical isomorphisms copy coefficients.
inline AlgebraVector sharp(const AlgebraCovector& xi) { return AlgebraVector(xi.coeffs()); }
inline AlgebraCovector flat(const AlgebraVector& y) { return AlgebraCovector(y.coeffs()); }

double inner(const AlgebraVector& y, const AlgebraVector& z);

/// Which faithful matrix group realizes the algebra.
enum class GroupKind {
  Orthogonal,  // so(n) in SO(n); su(2) as unit quaternions acting on R^4
  Translation  // abelian R^n as (n+1)x(n+1) unipotent translation matrices
};

/// A catalog algebra: structure constants plus a real matrix realization
/// {Â_i} with [Â_i, Â_j] = sum_k C^k_ij Â_k.
class Algebra {
 public:
  Algebra(std::string id, StructureConstants sc, std::vector<Eigen::MatrixXd> basis, GroupKind kind);

  const std::string& id() const noexcept { return id_; }
  const StructureConstants& structure() const& noexcept { return sc_; }
  // By value on temporaries, so `catalog(id).structure()` cannot dangle.
  StructureConstants structure() && { return std::move(sc_); }
  std::size_t dim() const noexcept { return sc_.dim(); }
  /// Size d of the representation matrices.
  std::size_t rep_dim() const noexcept { return static_cast<std::size_t>(basis_.front().rows()); }
  GroupKind kind() const noexcept { return kind_; }

  const Eigen::MatrixXd& basis_matrix(std::size_t i) const { return basis_[i]; }
  const std::vector<Eigen::MatrixXd>& basis_matrices() const noexcept { return basis_; }

  /// sum_i y_i Â_i
  Eigen::MatrixXd to_matrix(const Eigen::VectorXd& y) const;

  /// Re-expands a matrix in the basis; `residual` receives the Frobenius norm
  /// of the part outside the span.
  Eigen::VectorXd from_matrix(const Eigen::MatrixXd& m, double* residual = nullptr) const;

 private:
  std::string id_;
  StructureConstants sc_;
  std::vector<Eigen::MatrixXd> basis_;
  std::vector<double> basis_norm2_;
  GroupKind kind_;
};

/// Recognized identifiers: "so3", "so4", "so5", "su2", "abelianN" (N >= 1).
/// Throws ContractViolation for anything else.
Algebra catalog(std::string_view id);

/// Identifiers exercised by validation sweeps.
std::vector<std::string> catalog_ids();

}  // namespace liecubic
