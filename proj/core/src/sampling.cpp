#include "liecubic/sampling.hpp"

#include <numbers>

namespace liecubic {

namespace {

Eigen::VectorXd uniform(std::size_t n, Rng& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = dist(rng);
  return v;
}

}  // namespace

AlgebraVector random_vector(std::size_t n, Rng& rng, double scale) { return AlgebraVector(uniform(n, rng, scale)); }

AlgebraCovector random_covector(std::size_t n, Rng& rng, double scale) {
  return AlgebraCovector(uniform(n, rng, scale));
}

GroupElement random_element(const Algebra& alg, Rng& rng) {
  return project_to_group(alg, exp_map(alg, random_vector(alg.dim(), rng, std::numbers::pi)));
}

FullState random_full_state(const Algebra& alg, Rng& rng) {
  const std::size_t n = alg.dim();
  GroupElement x = random_element(alg, rng);
  AlgebraVector y = random_vector(n, rng);
  AlgebraCovector mu = random_covector(n, rng);
  AlgebraCovector xi = random_covector(n, rng);
  return {std::move(x), std::move(y), std::move(mu), std::move(xi)};
}

ReducedState random_reduced_state(const Algebra& alg, Rng& rng) {
  const std::size_t n = alg.dim();
  AlgebraCovector theta = random_covector(n, rng);
  while (theta.norm() < 0.25) theta = random_covector(n, rng);
  AlgebraVector y = random_vector(n, rng);
  AlgebraCovector xi = random_covector(n, rng);
  return {std::move(theta), std::move(y), std::move(xi)};
}

FullState random_level_set_state(const Algebra& alg, const AlgebraCovector& eta, Rng& rng) {
  const std::size_t n = alg.dim();
  GroupElement x = random_element(alg, rng);
  AlgebraVector y = random_vector(n, rng);
  AlgebraCovector xi = random_covector(n, rng);
  return embed_upsilon(alg, x, y, xi, eta);
}

}  // namespace liecubic
