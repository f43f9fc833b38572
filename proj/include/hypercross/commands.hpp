#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercross/config.hpp"
#include "hypercross/crossing.hpp"
#include "hypercross/moment.hpp"

namespace hypercross {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitDegenerateInput = 3,
};

enum class Command { kGenMoment, kGale, kSeparations, kCross, kCount, kBounds, kVerify, kSearchMin };

enum class Format { kJson, kCsv };

/// Everything a command needs. Identical specs give identical output bytes.
struct RunSpec {
  Command command = Command::kBounds;
  std::size_t dim = 0;
  std::size_t n = 0;
  std::string ts;          // "a,b,c" with p/q rationals; empty means 1..n
  std::string input_path;  // PointConfig JSON; overrides --dim/--ts
  std::uint64_t seed = 42;
  long trials = 25;
  Format format = Format::kJson;
  bool witnesses = false;
  bool closed_form = false;
  std::string left;   // 1-based, comma separated
  std::string right;
  std::size_t d_min = 2;
  std::size_t d_max = 4;
  int threads = 0;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // stdout payload
  std::string error;   // stderr message
};

/// Runs one command; library errors are mapped onto exit codes
/// (degenerate input -> 3, bad usage/parameters -> 2).
CommandResult execute(const RunSpec& spec);

struct VerifyCheck {
  std::string name;
  bool passed = true;
  nlohmann::json detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::vector<std::string> cdm;  // closed-form values for d_min .. d_max
  bool degenerate_input = false;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Replaceable pieces of the verification suite, for failure-injection tests.
struct VerifyHooks {
  std::function<BigCount(std::size_t)> cdm = closed_form_cdm;
};

struct VerifyOptions {
  std::size_t d_min = 2;
  std::size_t d_max = 4;
  long trials = 25;
  std::uint64_t seed = 42;
  std::optional<PointConfig> input;
  int threads = 0;
};

/// Runs the invariant suite: c_d^m three-way agreement, alternation vs LP,
/// Gale span/convexity bridges, separation/crossing bijection for m = d+3,
/// convex K_6^3 count, extension property, bound chain and random-config
/// lower bound. Geometric checks run for d <= 5, combinatorial ones for d <= 14.
VerifyReport run_verify(const VerifyOptions& options, const VerifyHooks& hooks = {});

struct SearchResult {
  PointConfig best;
  CrossingReport report;
  long evaluations = 0;
};

/// Random restarts plus single-coordinate perturbations, minimizing the
/// number of crossing pairs of d-sets. Deterministic per seed; stops early
/// on zero crossings. Throws Error(kParameter) if trials <= 0 or n < 2d.
SearchResult search_min(std::size_t d, std::size_t n, long trials, std::uint64_t seed,
                        int threads = 0);

}  // namespace hypercross
