#include "liecubic/group.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace liecubic {

namespace {

void require_same_group(const Algebra& alg, const GroupElement& x) {
  if (x.algebra_id != alg.id())
    throw ContractViolation("group element of '" + x.algebra_id + "' used with algebra '" + alg.id() + "'");
}

}  // namespace

GroupElement identity(const Algebra& alg) {
  const auto d = static_cast<Eigen::Index>(alg.rep_dim());
  return {Eigen::MatrixXd::Identity(d, d), alg.id()};
}

GroupElement make_element(const Algebra& alg, Eigen::MatrixXd mat, double tol) {
  const auto d = static_cast<Eigen::Index>(alg.rep_dim());
  if (mat.rows() != d || mat.cols() != d)
    throw ContractViolation("group element for '" + alg.id() + "' must be " + std::to_string(d) + "x" +
                            std::to_string(d));
  GroupElement x{std::move(mat), alg.id()};
  const double r = membership_residual(alg, x);
  if (!(r <= tol)) throw DomainError("matrix is not in the group of '" + alg.id() + "' (residual " + format_sci(r) + ")");
  return x;
}

double membership_residual(const Algebra& alg, const GroupElement& x) {
  require_same_group(alg, x);
  const auto& m = x.mat;
  const auto d = m.rows();
  if (alg.kind() == GroupKind::Orthogonal) {
    const double orth = (m.transpose() * m - Eigen::MatrixXd::Identity(d, d)).norm();
    return std::max(orth, std::abs(m.determinant() - 1.0));
  }
  Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(d, d);
  expected.col(d - 1).head(d - 1) = m.col(d - 1).head(d - 1);
  return (m - expected).norm();
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.algebra_id != b.algebra_id) throw ContractViolation("multiply: elements of different groups");
  return {a.mat * b.mat, a.algebra_id};
}

GroupElement inverse(const Algebra& alg, const GroupElement& x) {
  require_same_group(alg, x);
  if (alg.kind() == GroupKind::Orthogonal) return {x.mat.transpose(), x.algebra_id};
  const auto d = x.mat.rows();
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(d, d);
  inv.col(d - 1).head(d - 1) = -x.mat.col(d - 1).head(d - 1);
  return {std::move(inv), x.algebra_id};
}

GroupElement exp_map(const Algebra& alg, const AlgebraVector& y, double t) {
  const Eigen::MatrixXd a = t * alg.to_matrix(y.coeffs());
  const auto d = a.rows();
  if (alg.kind() == GroupKind::Translation) {
    // Translation generators are nilpotent of order two.
    return {Eigen::MatrixXd::Identity(d, d) + a, alg.id()};
  }
  return {a.exp(), alg.id()};
}

GroupElement project_to_group(const Algebra& alg, const GroupElement& x) {
  require_same_group(alg, x);
  if (alg.kind() == GroupKind::Translation) {
    const auto d = x.mat.rows();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
    m.col(d - 1).head(d - 1) = x.mat.col(d - 1).head(d - 1);
    return {std::move(m), x.algebra_id};
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x.mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd u = svd.matrixU();
  Eigen::MatrixXd r = u * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    u.col(u.cols() - 1) *= -1.0;
    r = u * svd.matrixV().transpose();
  }
  return {std::move(r), x.algebra_id};
}

Eigen::MatrixXd adjoint_matrix(const Algebra& alg, const GroupElement& x) {
  require_same_group(alg, x);
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (alg.kind() == GroupKind::Translation) return Eigen::MatrixXd::Identity(n, n);
  const double membership = membership_residual(alg, x);
  if (!(membership <= 1e-9)) throw DomainError("Ad: element is not in the group (residual " + format_sci(membership) + ")");
  const Eigen::MatrixXd xinv = inverse(alg, x).mat;
  Eigen::MatrixXd ad(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::MatrixXd conj = x.mat * alg.basis_matrix(static_cast<std::size_t>(j)) * xinv;
    double residual = 0.0;
    ad.col(j) = alg.from_matrix(conj, &residual);
    if (!(residual <= 1e-9 * std::max(1.0, conj.norm())))
      throw DomainError("Ad: conjugated basis element left the algebra (residual " + format_sci(residual) + ")");
  }
  return ad;
}

AlgebraVector adjoint_Ad(const Algebra& alg, const GroupElement& x, const AlgebraVector& y) {
  require_dim(alg.structure(), y.size(), "adjoint_Ad");
  return AlgebraVector(adjoint_matrix(alg, x) * y.coeffs());
}

AlgebraCovector coadjoint_Ad_star(const Algebra& alg, const GroupElement& x, const AlgebraCovector& xi) {
  require_dim(alg.structure(), xi.size(), "coadjoint_Ad_star");
  return AlgebraCovector(adjoint_matrix(alg, x).transpose() * xi.coeffs());
}

SemidirectTangent semidirect_left_translate(const Algebra& alg, const GroupElement& x, const AlgebraVector& y,
                                            const AlgebraVector& z, const AlgebraVector& u) {
  require_same_group(alg, x);
  return {z, u + bracket(alg.structure(), y, z)};
}

SemidirectElement semidirect_multiply(const Algebra& alg, const SemidirectElement& a, const SemidirectElement& b) {
  const GroupElement binv = inverse(alg, b.x);
  return {multiply(a.x, b.x), adjoint_Ad(alg, binv, a.y) + b.y};
}

SemidirectElement semidirect_inverse(const Algebra& alg, const SemidirectElement& a) {
  return {inverse(alg, a.x), -adjoint_Ad(alg, a.x, a.y)};
}

}  // namespace liecubic
