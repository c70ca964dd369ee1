#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "edmsphere/tolerances.hpp"

namespace edmsphere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFault = 1;
inline constexpr int kExitRejected = 2;

/// Payload of one command before it is wrapped into a run report.
struct CommandOutcome {
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json verification = nlohmann::json::object();
  int exit_code = kExitOk;
  std::string diagnostics;  // for stderr
};

CommandOutcome validate(std::string_view matrix_text, const Tolerances& tol);
CommandOutcome orthorep(std::string_view graph_text, const Tolerances& tol);
CommandOutcome decompose(std::string_view matrix_text, const Tolerances& tol);
CommandOutcome check_rankin_file(std::string_view matrix_text, const Tolerances& tol);
CommandOutcome check_rankin_sample(Index r, Index trials, std::uint64_t seed, const Tolerances& tol);

/// Matrix text for `gen <kind> params...`. Throws PreconditionError on bad
/// parameters.
std::string generate(std::string_view kind, const std::vector<double>& params,
                     std::optional<std::uint64_t> seed, const Tolerances& tol);

/// Full command line: `edmsphere <command> [args] [options]`. Writes one JSON
/// report to `out` (or the generated matrix for `gen` without `-o`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edmsphere::cli
