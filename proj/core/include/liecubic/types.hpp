#pragma once

#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace liecubic {

/// Shortest round-trip scientific form of v, for error messages.
inline std::string format_sci(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

/// Raised when a caller breaks an operation's precondition (dimension
/// mismatch, index out of range, invalid step size).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well-formed but outside the mathematical domain
/// of the operation (state off a level set, matrix outside the algebra).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by integrators when the state stops being finite.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, std::size_t step)
      : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Coefficient array over a fixed basis. The tag keeps elements of the Lie
/// algebra and of its dual from being mixed up silently.
template <class Tag>
class Coefficients {
 public:
  Coefficients() = default;
  explicit Coefficients(Eigen::VectorXd c) : c_(std::move(c)) {}
  Coefficients(std::initializer_list<double> values) : c_(static_cast<Eigen::Index>(values.size())) {
    Eigen::Index i = 0;
    for (double v : values) c_[i++] = v;
  }

  static Coefficients zero(std::size_t n) {
    return Coefficients(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)));
  }
  /// i-th basis element (0-based).
  static Coefficients unit(std::size_t n, std::size_t i) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    c[static_cast<Eigen::Index>(i)] = 1.0;
    return Coefficients(std::move(c));
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(c_.size()); }
  double operator[](std::size_t i) const { return c_[static_cast<Eigen::Index>(i)]; }
  double& operator[](std::size_t i) { return c_[static_cast<Eigen::Index>(i)]; }

  const Eigen::VectorXd& coeffs() const noexcept { return c_; }
  Eigen::VectorXd& coeffs() noexcept { return c_; }

  double norm() const { return c_.norm(); }
  double max_abs() const { return c_.size() == 0 ? 0.0 : c_.cwiseAbs().maxCoeff(); }
  bool all_finite() const { return c_.allFinite(); }

  Coefficients& operator+=(const Coefficients& o) {
    require_same(o);
    c_ += o.c_;
    return *this;
  }
  Coefficients& operator-=(const Coefficients& o) {
    require_same(o);
    c_ -= o.c_;
    return *this;
  }
  Coefficients& operator*=(double a) {
    c_ *= a;
    return *this;
  }

  friend Coefficients operator+(Coefficients a, const Coefficients& b) { return a += b; }
  friend Coefficients operator-(Coefficients a, const Coefficients& b) { return a -= b; }
  friend Coefficients operator-(Coefficients a) {
    a.c_ = -a.c_;
    return a;
  }
  friend Coefficients operator*(double s, Coefficients a) { return a *= s; }
  friend Coefficients operator*(Coefficients a, double s) { return a *= s; }

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.c_.size() == b.c_.size() && a.c_ == b.c_;
  }

 private:
  void require_same(const Coefficients& o) const {
    if (o.c_.size() != c_.size()) {
      throw ContractViolation("coefficient arrays of different dimension (" + std::to_string(c_.size()) +
                              " vs " + std::to_string(o.c_.size()) + ")");
    }
  }

  Eigen::VectorXd c_;
};

struct VectorTag {};
struct CovectorTag {};

/// Element of the Lie algebra, components over the orthonormal basis {A_i}.
using AlgebraVector = Coefficients<VectorTag>;
/// Element of the dual algebra, components over the dual basis {e^i}.
using AlgebraCovector = Coefficients<CovectorTag>;

/// Dual pairing xi(Y).
inline double pairing(const AlgebraCovector& xi, const AlgebraVector& y) {
  if (xi.size() != y.size()) throw ContractViolation("pairing: dimension mismatch");
  return xi.coeffs().dot(y.coeffs());
}

/// Sup-norm distance, used throughout the tests and the acceptance suite.
template <class Tag>
double sup_distance(const Coefficients<Tag>& a, const Coefficients<Tag>& b) {
  return (a - b).max_abs();
}

}  // namespace liecubic
