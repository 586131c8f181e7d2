#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using liecubic::cli::ConfigError;
using liecubic::cli::RunConfig;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("liecubic");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("LIECUBIC_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

nlohmann::ordered_json read_document(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return nlohmann::ordered_json::parse(buf.str());
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw ConfigError("config", e.what());
  }
}

struct Flags {
  std::string config;
  std::optional<std::string> algebra, mode, output, format;
  std::optional<double> T, h;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> stride;
  std::vector<double> eta;
};

void add_flags(CLI::App* cmd, Flags& f, bool with_mode) {
  cmd->add_option("--config", f.config, "JSON config file, '-' for stdin");
  cmd->add_option("--algebra", f.algebra, "so3, so4, so5, su2 or abelianN");
  if (with_mode) cmd->add_option("--mode", f.mode, "full, reduced, euler-lagrange, report or verify");
  cmd->add_option("--T", f.T, "time horizon");
  cmd->add_option("--h", f.h, "step size");
  cmd->add_option("--eta", f.eta, "momentum level, comma separated")->delimiter(',');
  cmd->add_option("--seed", f.seed, "seed for random initial data");
  cmd->add_option("--output", f.output, "output path, '-' for stdout");
  cmd->add_option("--format", f.format, "jsonl or csv");
  cmd->add_option("--stride", f.stride, "write every stride-th sample");
}

RunConfig build_config(const Flags& f, const std::string& subcommand) {
  RunConfig cfg = f.config.empty() ? RunConfig{} : liecubic::cli::config_from_json(read_document(f.config));
  if (f.algebra) cfg.algebra = *f.algebra;
  if (f.mode) cfg.mode = *f.mode;
  if (f.T) cfg.T = *f.T;
  if (f.h) cfg.h = *f.h;
  if (f.seed) cfg.seed = *f.seed;
  if (f.output) cfg.output = *f.output;
  if (f.format) cfg.format = *f.format;
  if (f.stride) cfg.stride = *f.stride;
  if (!f.eta.empty()) cfg.eta = f.eta;
  if (subcommand == "report" || subcommand == "verify") cfg.mode = subcommand;
  if (subcommand == "simulate" && (cfg.mode == "report" || cfg.mode == "verify"))
    throw ConfigError("mode", "'" + cfg.mode + "' is a subcommand of its own");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Riemannian cubics on Lie groups: simulation, reduction and invariants"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Flags sim, rep, ver;
  add_flags(app.add_subcommand("simulate", "integrate full, reduced or euler-lagrange dynamics"), sim, true);
  add_flags(app.add_subcommand("report", "print the invariant report as JSON"), rep, false);
  add_flags(app.add_subcommand("verify", "run the acceptance property suite"), ver, false);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : liecubic::cli::kExitConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const Flags& flags = name == "simulate" ? sim : name == "report" ? rep : ver;
  RunConfig cfg;
  const int code = liecubic::cli::guarded(std::cerr, [&] { cfg = build_config(flags, name); });
  if (code != 0) return code;
  return liecubic::cli::run(cfg, std::cout, std::cerr);
}
