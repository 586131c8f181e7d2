#include "cli/config.hpp"

#include <algorithm>
#include <cmath>

#include "liecubic/sampling.hpp"

namespace liecubic::cli {

using json = nlohmann::ordered_json;

namespace {

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> vector_of(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(number(e, key));
  return out;
}

std::vector<std::vector<double>> matrix_of(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ConfigError(key, "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : v) rows.push_back(vector_of(r, key));
  return rows;
}

AlgebraVector as_vector(const std::vector<double>& v, std::size_t n, const char* key) {
  if (v.size() != n)
    throw ConfigError(key, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return AlgebraVector(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(n)));
}

AlgebraCovector as_covector(const std::vector<double>& v, std::size_t n, const char* key) {
  return AlgebraCovector(as_vector(v, n, key).coeffs());
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

json rows_of(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Eigen::VectorXd row = m.row(i).transpose();
    rows.push_back(to_std(row));
  }
  return rows;
}

GroupElement initial_element(const Algebra& alg, const RunConfig& cfg, const GroupElement& drawn) {
  if (cfg.x0 && cfg.x0_exp) throw ConfigError("x0_exp", "give either x0 or x0_exp, not both");
  if (cfg.x0_exp) return project_to_group(alg, exp_map(alg, as_vector(*cfg.x0_exp, alg.dim(), "x0_exp")));
  if (!cfg.x0) return drawn;
  const auto d = static_cast<Eigen::Index>(alg.rep_dim());
  const auto& rows = *cfg.x0;
  if (rows.size() != alg.rep_dim()) throw ConfigError("x0", "expected " + std::to_string(d) + " rows");
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != alg.rep_dim()) throw ConfigError("x0", "expected " + std::to_string(d) + " columns");
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  try {
    return make_element(alg, m);
  } catch (const DomainError& e) {
    throw ConfigError("x0", e.what());
  }
}

}  // namespace

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");
  RunConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "algebra") {
      cfg.algebra = text(v, key);
    } else if (key == "mode") {
      cfg.mode = text(v, key);
    } else if (key == "T") {
      cfg.T = number(v, key);
    } else if (key == "h") {
      cfg.h = number(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError(key, "expected a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "output") {
      cfg.output = text(v, key);
    } else if (key == "format") {
      cfg.format = text(v, key);
    } else if (key == "stride") {
      if (!v.is_number_unsigned()) throw ConfigError(key, "expected a positive integer");
      cfg.stride = v.get<std::size_t>();
    } else if (key == "x0") {
      cfg.x0 = matrix_of(v, key);
    } else if (key == "x0_exp") {
      cfg.x0_exp = vector_of(v, key);
    } else if (key == "Y0") {
      cfg.Y0 = vector_of(v, key);
    } else if (key == "mu0") {
      cfg.mu0 = vector_of(v, key);
    } else if (key == "xi0") {
      cfg.xi0 = vector_of(v, key);
    } else if (key == "Ydot0") {
      cfg.Ydot0 = vector_of(v, key);
    } else if (key == "Yddot0") {
      cfg.Yddot0 = vector_of(v, key);
    } else if (key == "eta") {
      cfg.eta = vector_of(v, key);
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  return cfg;
}

void validate_scalars(const RunConfig& cfg) {
  const auto& modes = known_modes();
  if (std::find(modes.begin(), modes.end(), cfg.mode) == modes.end())
    throw ConfigError("mode", "unknown mode '" + cfg.mode + "'");
  if (cfg.format != "jsonl" && cfg.format != "csv") throw ConfigError("format", "expected jsonl or csv");
  if (!(cfg.T > 0.0) || !std::isfinite(cfg.T)) throw ConfigError("T", "must be positive and finite");
  if (!(cfg.h > 0.0) || !std::isfinite(cfg.h)) throw ConfigError("h", "must be positive and finite");
  if (cfg.T < cfg.h) throw ConfigError("h", "must not exceed T");
  if (cfg.T / cfg.h > 1e7) throw ConfigError("h", "T/h exceeds 1e7 steps");
  if (cfg.stride == 0) throw ConfigError("stride", "must be at least 1");
}

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::Momenta: return "mu0/xi0";
    case Convention::Jet: return "Ydot0/Yddot0";
    case Convention::Level: return "eta";
    case Convention::Random: break;
  }
  return "random";
}

ResolvedRun resolve(const RunConfig& cfg) {
  validate_scalars(cfg);
  std::optional<Algebra> found;
  try {
    found = catalog(cfg.algebra);
  } catch (const ContractViolation& e) {
    throw ConfigError("algebra", e.what());
  }
  const Algebra& alg = *found;
  const auto& sc = alg.structure();
  const std::size_t n = alg.dim();

  const bool has_mu = cfg.mu0.has_value();
  const bool has_jet = cfg.Ydot0 || cfg.Yddot0;
  const bool has_eta = cfg.eta.has_value();
  if (has_mu + has_jet + has_eta > 1) {
    const char* second = has_eta ? "eta" : "Ydot0";
    throw ConfigError(second, "conflicting initial data; supply exactly one of mu0/xi0, Ydot0/Yddot0, eta");
  }
  if (has_jet && cfg.xi0) throw ConfigError("xi0", "not used with Ydot0/Yddot0 (xi0 is flat(Ydot0))");
  if (has_jet && !cfg.Ydot0) throw ConfigError("Ydot0", "required together with Yddot0");
  if (has_jet && !cfg.Yddot0) throw ConfigError("Yddot0", "required together with Ydot0");

  Rng rng(cfg.seed);
  const FullState drawn = random_full_state(alg, rng);

  const GroupElement x = initial_element(alg, cfg, drawn.x);
  const AlgebraVector y = cfg.Y0 ? as_vector(*cfg.Y0, n, "Y0") : drawn.y;
  AlgebraCovector xi = cfg.xi0 ? as_covector(*cfg.xi0, n, "xi0") : drawn.xi;

  Convention convention = Convention::Random;
  FullState s0{x, y, drawn.mu, xi};
  ELState el0{};
  AlgebraCovector eta;
  if (has_mu) {
    convention = Convention::Momenta;
    s0.mu = as_covector(*cfg.mu0, n, "mu0");
  } else if (has_jet) {
    convention = Convention::Jet;
    el0 = {y, as_vector(*cfg.Ydot0, n, "Ydot0"), as_vector(*cfg.Yddot0, n, "Yddot0")};
    const MomentumPair m = momenta_from_boundary_data(sc, el0.y, el0.ydot, el0.yddot);
    s0.mu = m.mu;
    s0.xi = m.xi;
  } else if (has_eta) {
    convention = Convention::Level;
    eta = as_covector(*cfg.eta, n, "eta");
    s0 = embed_upsilon(alg, x, y, xi, eta);
  }
  if (convention != Convention::Level) eta = momentum_map_J(alg, s0);
  if (convention != Convention::Jet) el0 = el_state_from_momenta(sc, s0.y, s0.mu, s0.xi);

  ReducedState r0{coadjoint_Ad_star(alg, s0.x, eta), s0.y, s0.xi};
  return ResolvedRun{cfg, alg, convention, std::move(s0), std::move(eta), std::move(r0), std::move(el0)};
}

json resolved_config_json(const ResolvedRun& run) {
  const RunConfig& c = run.config;
  json doc = {{"algebra", run.algebra.id()}, {"mode", c.mode},     {"T", c.T},
              {"h", c.h},                    {"seed", c.seed},     {"output", c.output},
              {"format", c.format},          {"stride", c.stride}, {"x0", rows_of(run.s0.x.mat)},
              {"Y0", to_std(run.s0.y.coeffs())}};
  if (c.mode == "reduced" || c.mode == "report") {
    doc["xi0"] = to_std(run.s0.xi.coeffs());
    doc["eta"] = to_std(run.eta.coeffs());
  } else if (c.mode == "euler-lagrange") {
    doc["Ydot0"] = to_std(run.el0.ydot.coeffs());
    doc["Yddot0"] = to_std(run.el0.yddot.coeffs());
  } else {
    doc["mu0"] = to_std(run.s0.mu.coeffs());
    doc["xi0"] = to_std(run.s0.xi.coeffs());
  }
  return doc;
}

}  // namespace liecubic::cli
