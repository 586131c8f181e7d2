#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecubic/algebra.hpp"
#include "liecubic/full_dynamics.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/verification.hpp"

namespace liecubic::cli {

/// Invalid configuration; field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  std::string algebra = "so3";
  std::string mode = "full";
  double T = 10.0;
  double h = 1e-3;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "jsonl";
  std::size_t stride = 1;

  std::optional<std::vector<std::vector<double>>> x0;  // rows
  std::optional<std::vector<double>> x0_exp;
  std::optional<std::vector<double>> Y0;
  std::optional<std::vector<double>> mu0;
  std::optional<std::vector<double>> xi0;
  std::optional<std::vector<double>> Ydot0;
  std::optional<std::vector<double>> Yddot0;
  std::optional<std::vector<double>> eta;
};

inline const std::vector<std::string>& known_modes() {
  static const std::vector<std::string> modes{"full", "reduced", "euler-lagrange", "report", "verify"};
  return modes;
}

/// Reads a config document; unknown keys and mistyped values are errors.
RunConfig config_from_json(const nlohmann::ordered_json& doc);

/// Scalar checks that do not need the algebra (mode, format, T, h, stride).
void validate_scalars(const RunConfig& cfg);

/// Which initial-data block a run was started from.
enum class Convention { Random, Momenta, Jet, Level };

const char* convention_name(Convention c);

/// Fully determined initial data. Every missing vector is drawn from the
/// seed, always in the same order, so the draw does not depend on which
/// fields were supplied.
struct ResolvedRun {
  RunConfig config;
  Algebra algebra;
  Convention convention = Convention::Random;
  FullState s0;
  AlgebraCovector eta;
  ReducedState r0;  // (Ad*_{x0} eta, Y0, xi0)
  ELState el0;
};

ResolvedRun resolve(const RunConfig& cfg);

/// Resolved config as a document that reproduces the run when read back:
/// (x0, Y0, mu0, xi0) for full, (x0, Y0, Ydot0, Yddot0) for euler-lagrange,
/// (x0, Y0, xi0, eta) for reduced and report.
nlohmann::ordered_json resolved_config_json(const ResolvedRun& run);

}  // namespace liecubic::cli
