#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ldv/problem.hpp"

namespace ldv {

enum class OutputFormat { kHuman, kMachine };

struct RunFlags {
  std::optional<std::int64_t> max_order;  // diagonal: 10, radius: 39
  bool skip_nondeg = false;
  OutputFormat format = OutputFormat::kHuman;
  std::optional<std::uint64_t> spair_cap;
  std::optional<ExponentVector> ray;  // diagonal/radius along k = m * ray
};

enum ExitCode : int {
  kExitOk = 0,
  kExitMath = 1,
  kExitInput = 2,
  kExitResourceCap = 3,
  kExitInternal = 4,
};

struct RunResult {
  std::string text;        // report, for standard output
  std::string diagnostic;  // for standard error
  int exit_code = kExitOk;
};

bool is_command(std::string_view command);

// Never throws: errors become the diagnostic and the exit code.
RunResult run(std::string_view command, const ProblemFile& file, const RunFlags& flags);
RunResult run_source(std::string_view command, std::string_view problem_text, const RunFlags& flags);
RunResult run_path(std::string_view command, const std::string& path, const RunFlags& flags);

}  // namespace ldv
