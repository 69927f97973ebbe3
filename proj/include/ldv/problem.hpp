#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ldv/landau.hpp"

namespace ldv {

// Parsed problem file. Keys: vars, f, g, Q, order, spair_cap, skip_nondeg.
struct ProblemFile {
  DiagonalProblem problem;
  std::optional<std::uint64_t> spair_cap;
  bool skip_nondeg = false;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

// "[1,1,0,0; 0,0,1,1]"; "[]" is the empty matrix with `cols` columns.
IntegerMatrix parse_matrix(std::string_view text, std::size_t cols);

// The order from the file, or the origin when it is a vertex of the Newton
// polytope of f. Throws InputError otherwise.
ExponentVector expansion_order(const DiagonalProblem& problem);

}  // namespace ldv
