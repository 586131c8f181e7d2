#include "cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "cli/acceptance.hpp"
#include "liecubic/reduction.hpp"
#include "liecubic/verification.hpp"

namespace liecubic::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> row_major(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

void put_number(std::string& buf, double v) {
  char tmp[32];
  const auto res = std::to_chars(tmp, tmp + sizeof tmp, v);
  buf.append(tmp, res.ptr);
}

// A named block of one sample. cols > 0 marks a row-major matrix.
struct Field {
  const char* name;
  std::vector<double> values;
  bool scalar = false;
  std::size_t cols = 0;
};

using Record = std::vector<Field>;

std::vector<std::string> column_names(const Record& rec) {
  std::vector<std::string> names{"t"};
  for (const auto& f : rec) {
    if (f.scalar) {
      names.emplace_back(f.name);
    } else if (f.cols > 0) {
      for (std::size_t k = 0; k < f.values.size(); ++k)
        names.push_back(std::string(f.name) + "_" + std::to_string(k / f.cols + 1) + "_" +
                        std::to_string(k % f.cols + 1));
    } else {
      for (std::size_t k = 0; k < f.values.size(); ++k)
        names.push_back(std::string(f.name) + "_" + std::to_string(k + 1));
    }
  }
  return names;
}

class Writer {
 public:
  Writer(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  void header(const json& head, const Record& sample) {
    if (!csv_) {
      json h = head;
      h["columns"] = column_names(sample);
      out_ << h.dump() << '\n';
      return;
    }
    out_ << "# liecubic " << head["mode"].get<std::string>() << '\n';
    out_ << "# config " << head["config"].dump() << '\n';
    if (head.contains("report")) out_ << "# report " << head["report"].dump() << '\n';
    const auto names = column_names(sample);
    for (std::size_t k = 0; k < names.size(); ++k) out_ << (k ? "," : "") << names[k];
    out_ << '\n';
  }

  void record(double t, const Record& rec) {
    line_.clear();
    if (csv_) {
      put_number(line_, t);
      for (const auto& f : rec)
        for (double v : f.values) {
          line_ += ',';
          put_number(line_, v);
        }
    } else {
      line_ += "{\"t\":";
      put_number(line_, t);
      for (const auto& f : rec) {
        line_ += ",\"";
        line_ += f.name;
        line_ += "\":";
        if (f.scalar) {
          put_number(line_, f.values.front());
          continue;
        }
        line_ += '[';
        for (std::size_t k = 0; k < f.values.size(); ++k) {
          if (k) line_ += ',';
          put_number(line_, f.values[k]);
        }
        line_ += ']';
      }
      line_ += '}';
    }
    line_ += '\n';
    out_ << line_;
  }

 private:
  std::ostream& out_;
  bool csv_;
  std::string line_;
};

Record full_record(const Algebra& alg, const FullState& s) {
  const AlgebraCovector j = momentum_map_J(alg, s);
  return {{"x", row_major(s.x.mat), false, static_cast<std::size_t>(s.x.mat.cols())},
          {"Y", to_std(s.y.coeffs())},
          {"mu", to_std(s.mu.coeffs())},
          {"xi", to_std(s.xi.coeffs())},
          {"H", {hamiltonian_H(s)}, true},
          {"J", to_std(j.coeffs())},
          {"C", casimir_monitors(alg, j)}};
}

Record reduced_record(const Algebra& alg, const ReducedState& r) {
  const auto values = invariant_values(alg.structure(), r);
  return {{"theta", to_std(r.theta.coeffs())},
          {"Y", to_std(r.y.coeffs())},
          {"xi", to_std(r.xi.coeffs())},
          {"h", {values.front()}, true},
          {"l", values},
          {"C", casimir_monitors(alg, r.theta)}};
}

Record el_record(const ELState& s, const GroupElement& x) {
  return {{"Y", to_std(s.y.coeffs())},
          {"Ydot", to_std(s.ydot.coeffs())},
          {"Yddot", to_std(s.yddot.coeffs())},
          {"x", row_major(x.mat), false, static_cast<std::size_t>(x.mat.cols())}};
}

json base_header(const ResolvedRun& run) {
  return {{"type", "header"},
          {"program", "liecubic"},
          {"mode", run.config.mode},
          {"convention", convention_name(run.convention)},
          {"config", resolved_config_json(run)}};
}

json report_block(const ResolvedRun& run) {
  json rep = report_to_json(lie_cartan_report(run.algebra, run.r0, run.eta));
  rep["eta"] = to_std(run.eta.coeffs());
  return rep;
}

// Opens cfg.output, or hands back std::cout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw ConfigError("output", "cannot open '" + path + "' for writing");
  }

  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write to output failed");
  }

 private:
  std::ofstream file_;
};

}  // namespace

json report_to_json(const InvariantReport& rep) {
  json brackets = json::array();
  for (Eigen::Index i = 0; i < rep.bracket_matrix.rows(); ++i) {
    const Eigen::VectorXd row = rep.bracket_matrix.row(i).transpose();
    brackets.push_back(to_std(row));
  }
  return {{"algebra", rep.algebra_id},
          {"n", rep.n},
          {"m", rep.m},
          {"r_g", rep.r_g},
          {"lie_cartan_count", rep.lie_cartan_count},
          {"reduced_dim", rep.reduced_dim},
          {"phase_space_dim", rep.phase_space_dim},
          {"completely_integrable", rep.completely_integrable},
          {"trivial_orbit", rep.trivial_orbit},
          {"rank_witness", to_std(rep.rank_witness)},
          {"values", rep.values},
          {"bracket_matrix", brackets}};
}

void write_simulation(const ResolvedRun& run, std::ostream& out) {
  const RunConfig& cfg = run.config;
  const Algebra& alg = run.algebra;
  const std::size_t steps = step_count(cfg.T, cfg.h);
  const auto keep = [&](std::size_t k) { return k % cfg.stride == 0 || k == steps; };
  Writer writer(out, cfg.format == "csv");
  json head = base_header(run);
  spdlog::info("simulate {} on {}: T={} h={} steps={} convention={}", cfg.mode, alg.id(), cfg.T, cfg.h, steps,
               convention_name(run.convention));

  if (cfg.mode == "full") {
    writer.header(head, full_record(alg, run.s0));
    integrate_full(alg, run.s0, cfg.T, cfg.h, [&](std::size_t k, double t, const FullState& s) {
      if (keep(k)) writer.record(t, full_record(alg, s));
    });
  } else if (cfg.mode == "reduced") {
    head["report"] = report_block(run);
    writer.header(head, reduced_record(alg, run.r0));
    integrate_reduced(alg, run.r0, cfg.T, cfg.h, [&](std::size_t k, double t, const ReducedState& r) {
      if (keep(k)) writer.record(t, reduced_record(alg, r));
    });
  } else if (cfg.mode == "euler-lagrange") {
    writer.header(head, el_record(run.el0, run.s0.x));
    GroupElement x = run.s0.x;
    AlgebraVector previous = run.el0.y;
    integrate_euler_lagrange(alg.structure(), run.el0, cfg.T, cfg.h, [&](std::size_t k, double t, const ELState& s) {
      if (k > 0) {
        const AlgebraVector pair[2] = {previous, s.y};
        x = reconstruct_group_path(alg, pair, x, cfg.h).back();
        previous = s.y;
      }
      if (keep(k)) writer.record(t, el_record(s, x));
    });
  } else {
    throw ConfigError("mode", "'" + cfg.mode + "' does not produce a trajectory");
  }
}

void write_report(const ResolvedRun& run, std::ostream& out) {
  json doc = report_block(run);
  doc["config"] = resolved_config_json(run);
  out << doc.dump(2) << '\n';
}

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "liecubic: invalid config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IntegrationError& e) {
    err << "liecubic: numerical blow-up: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const std::exception& e) {
    err << "liecubic: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_simulate(const RunConfig& cfg, std::ostream& err) {
  return guarded(err, [&] {
    const ResolvedRun run = resolve(cfg);
    Sink sink(cfg.output);
    write_simulation(run, sink.stream());
    sink.finish();
  });
}

int cmd_report(const RunConfig& cfg, std::ostream& err) {
  return guarded(err, [&] {
    const ResolvedRun run = resolve(cfg);
    Sink sink(cfg.output);
    write_report(run, sink.stream());
    sink.finish();
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool all = false;
  const int code = guarded(err, [&] {
    validate_scalars(cfg);
    SuiteOptions options;
    options.seed = cfg.seed;
    const auto results = run_acceptance_suite(options);
    all = true;
    for (const auto& r : results) {
      out << format_result(r) << '\n';
      all = all && r.passed;
    }
    out.flush();
  });
  if (code != kExitOk) return code;
  return all ? kExitOk : kExitFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.mode == "report") return cmd_report(cfg, err);
  if (cfg.mode == "verify") return cmd_verify(cfg, out, err);
  return cmd_simulate(cfg, err);
}

}  // namespace liecubic::cli
