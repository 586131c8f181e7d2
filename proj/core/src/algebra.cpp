#include "liecubic/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

namespace liecubic {

StructureConstants::StructureConstants(std::size_t n, std::vector<double> c) : n_(n), c_(std::move(c)) {
  if (n_ == 0) throw ContractViolation("structure constants: dimension must be positive");
  if (c_.size() != n_ * n_ * n_) {
    throw ContractViolation("structure constants: expected " + std::to_string(n_ * n_ * n_) + " entries, got " +
                            std::to_string(c_.size()));
  }
  const auto ni = static_cast<Eigen::Index>(n_);
  ad_.assign(n_, Eigen::MatrixXd::Zero(ni, ni));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const double v = (*this)(i, j, k);
        ad_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
        if (v != 0.0) abelian_ = false;
      }
}

StructureConstants StructureConstants::abelian(std::size_t n) {
  return StructureConstants(n, std::vector<double>(n * n * n, 0.0));
}

StructureConstants::Residuals StructureConstants::validate() const {
  Residuals r;
  const auto& C = *this;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        r.antisymmetry = std::max(r.antisymmetry, std::abs(C(i, j, k) + C(j, i, k)));
        r.ad_invariance = std::max(r.ad_invariance, std::abs(C(i, j, k) + C(i, k, j)));
        for (std::size_t l = 0; l < n_; ++l) {
          double s = 0.0;
          for (std::size_t m = 0; m < n_; ++m)
            s += C(i, j, m) * C(m, k, l) + C(j, k, m) * C(m, i, l) + C(k, i, m) * C(m, j, l);
          r.jacobi = std::max(r.jacobi, std::abs(s));
        }
      }
  return r;
}

void require_dim(const StructureConstants& sc, std::size_t got, const char* what) {
  if (got != sc.dim()) {
    throw ContractViolation(std::string(what) + ": expected dimension " + std::to_string(sc.dim()) + ", got " +
                            std::to_string(got));
  }
}

Eigen::MatrixXd ad_matrix(const StructureConstants& sc, const AlgebraVector& y) {
  require_dim(sc, y.size(), "ad");
  const auto n = static_cast<Eigen::Index>(sc.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < sc.dim(); ++i)
    if (y[i] != 0.0) m += y[i] * sc.ad_basis(i);
  return m;
}

Eigen::MatrixXd structure_matrix(const StructureConstants& sc, const Eigen::VectorXd& a) {
  require_dim(sc, static_cast<std::size_t>(a.size()), "structure_matrix");
  const std::size_t n = sc.dim();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += sc(i, j, k) * a[static_cast<Eigen::Index>(k)];
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
    }
  return m;
}

AlgebraVector bracket(const StructureConstants& sc, const AlgebraVector& y, const AlgebraVector& z) {
  require_dim(sc, z.size(), "bracket");
  if (sc.is_abelian()) return AlgebraVector::zero(sc.dim());
  return AlgebraVector(ad_matrix(sc, y) * z.coeffs());
}

AlgebraCovector ad_star(const StructureConstants& sc, const AlgebraVector& y, const AlgebraCovector& xi) {
  require_dim(sc, xi.size(), "ad_star");
  if (sc.is_abelian()) {
    require_dim(sc, y.size(), "ad_star");
    return AlgebraCovector::zero(sc.dim());
  }
  return AlgebraCovector(ad_matrix(sc, y).transpose() * xi.coeffs());
}

double inner(const AlgebraVector& y, const AlgebraVector& z) {
  if (y.size() != z.size()) throw ContractViolation("inner: dimension mismatch");
  return y.coeffs().dot(z.coeffs());
}

Algebra::Algebra(std::string id, StructureConstants sc, std::vector<Eigen::MatrixXd> basis, GroupKind kind)
    : id_(std::move(id)), sc_(std::move(sc)), basis_(std::move(basis)), kind_(kind) {
  if (basis_.size() != sc_.dim()) throw ContractViolation("algebra: basis size differs from dimension");
  for (const auto& b : basis_) basis_norm2_.push_back(b.squaredNorm());
}

Eigen::MatrixXd Algebra::to_matrix(const Eigen::VectorXd& y) const {
  require_dim(sc_, static_cast<std::size_t>(y.size()), "to_matrix");
  const auto d = static_cast<Eigen::Index>(rep_dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < basis_.size(); ++i) m += y[static_cast<Eigen::Index>(i)] * basis_[i];
  return m;
}

Eigen::VectorXd Algebra::from_matrix(const Eigen::MatrixXd& m, double* residual) const {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    c[static_cast<Eigen::Index>(i)] = m.cwiseProduct(basis_[i]).sum() / basis_norm2_[i];
  if (residual) *residual = (m - to_matrix(c)).norm();
  return c;
}

namespace {

Eigen::MatrixXd elementary_rotation(int d, int i, int j) {
  // E_ji - E_ij: rotates e_i towards e_j.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m(j, i) = 1.0;
  m(i, j) = -1.0;
  return m;
}

StructureConstants constants_from_basis(const std::vector<Eigen::MatrixXd>& basis) {
  const std::size_t n = basis.size();
  std::vector<double> c(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Eigen::MatrixXd comm = basis[i] * basis[j] - basis[j] * basis[i];
      for (std::size_t k = 0; k < n; ++k) {
        double v = comm.cwiseProduct(basis[k]).sum() / basis[k].squaredNorm();
        // Products of 0, ±1, ±1/2 entries: snap rounding noise.
        if (std::abs(v) < 1e-15) v = 0.0;
        c[(i * n + j) * n + k] = v;
      }
    }
  return StructureConstants(n, std::move(c));
}

Algebra make_so(int dim) {
  std::vector<Eigen::MatrixXd> basis;
  if (dim == 3) {
    // Cyclic order so that [A_1, A_2] = A_3.
    basis = {elementary_rotation(3, 1, 2), elementary_rotation(3, 2, 0), elementary_rotation(3, 0, 1)};
  } else {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) basis.push_back(elementary_rotation(dim, i, j));
  }
  // E_ji - E_ij has -1/2 tr(A^2) = 1; the Frobenius products used for
  // re-expansion differ from the trace form only by that constant factor.
  auto sc = constants_from_basis(basis);
  return Algebra("so" + std::to_string(dim), std::move(sc), std::move(basis), GroupKind::Orthogonal);
}

Algebra make_su2() {
  // Left multiplication by i, j, k on quaternion components (a, b, c, d).
  Eigen::Matrix4d li, lj, lk;
  li << 0, -1, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, -1,
        0, 0, 1, 0;
  lj << 0, 0, -1, 0,
        0, 0, 0, 1,
        1, 0, 0, 0,
        0, -1, 0, 0;
  lk << 0, 0, 0, -1,
        0, 0, -1, 0,
        0, 1, 0, 0,
        1, 0, 0, 0;
  std::vector<Eigen::MatrixXd> basis = {0.5 * li, 0.5 * lj, 0.5 * lk};
  auto sc = constants_from_basis(basis);
  return Algebra("su2", std::move(sc), std::move(basis), GroupKind::Orthogonal);
}

Algebra make_abelian(int n) {
  std::vector<Eigen::MatrixXd> basis;
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
    m(k, n) = 1.0;
    basis.push_back(std::move(m));
  }
  return Algebra("abelian" + std::to_string(n), StructureConstants::abelian(static_cast<std::size_t>(n)),
                 std::move(basis), GroupKind::Translation);
}

}  // namespace

Algebra catalog(std::string_view id) {
  if (id == "so3") return make_so(3);
  if (id == "so4") return make_so(4);
  if (id == "so5") return make_so(5);
  if (id == "su2") return make_su2();
  constexpr std::string_view prefix = "abelian";
  if (id.starts_with(prefix) && id.size() > prefix.size()) {
    int n = 0;
    const auto digits = id.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 64) return make_abelian(n);
  }
  throw ContractViolation("unknown algebra identifier '" + std::string(id) + "'");
}

std::vector<std::string> catalog_ids() { return {"so3", "so4", "so5", "su2", "abelian1", "abelian3"}; }

}  // namespace liecubic
