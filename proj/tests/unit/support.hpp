#pragma once

#include <gtest/gtest.h>

#include <string>

#include "liecubic/algebra.hpp"
#include "liecubic/sampling.hpp"
#include "liecubic/types.hpp"

namespace liecubic::testing {

template <class Tag>
::testing::AssertionResult coeffs_near(const Coefficients<Tag>& got, const Eigen::VectorXd& want, double tol) {
  if (got.size() != static_cast<std::size_t>(want.size()))
    return ::testing::AssertionFailure() << "size " << got.size() << " vs " << want.size();
  const double err = (got.coeffs() - want).cwiseAbs().maxCoeff();
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max error " << err << " > " << tol << "\n got  " << got.coeffs().transpose()
                                       << "\n want " << want.transpose();
}

inline Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline AlgebraVector e_vec(std::size_t n, std::size_t i) { return AlgebraVector::unit(n, i); }
inline AlgebraCovector e_cov(std::size_t n, std::size_t i) { return AlgebraCovector::unit(n, i); }

// Algebras with a non-trivial bracket, used by most property tests.
inline std::vector<std::string> nonabelian_ids() { return {"so3", "su2", "so4", "so5"}; }

}  // namespace liecubic::testing
