#pragma once

#include <functional>
#include <ostream>

#include <json.hpp>

#include "cli/config.hpp"
#include "liecubic/invariants.hpp"

namespace liecubic::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBlowUp = 3;

nlohmann::ordered_json report_to_json(const InvariantReport& rep);

/// Writes the trajectory of a resolved full, reduced or euler-lagrange run.
void write_simulation(const ResolvedRun& run, std::ostream& out);

/// Writes the InvariantReport of a resolved run as one JSON document.
void write_report(const ResolvedRun& run, std::ostream& out);

/// Runs body and maps exceptions to exit codes, printing the message to err.
int guarded(std::ostream& err, const std::function<void()>& body);

/// Resolves cfg and writes to cfg.output ("-" is standard output).
int cmd_simulate(const RunConfig& cfg, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& err);

/// Runs the acceptance suite, one line per criterion on out; 0 iff all pass.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.mode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace liecubic::cli
