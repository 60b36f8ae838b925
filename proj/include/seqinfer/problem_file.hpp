#pragma once

#include "seqinfer/expr.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqinfer {

// A sequence-inference problem read from a .prob file:
//   - '#' starts a comment (whole line or trailing), blank lines are skipped
//   - '@first_index <int>' and '@generator <expression>' directives must
//     precede all expression lines
//   - every remaining line is one observation; at least 3 are required
struct Problem {
  std::string name;  // file stem
  long long first_index = 1;
  std::optional<Expr> generator;
  std::vector<Expr> observations;
  std::vector<int> lines;  // 1-based source line of each observation
};

struct ProblemFileError : std::runtime_error {
  ProblemFileError(const std::string& file, int line, const std::string& msg);
  std::string file;
  int line;  // 0 when the error is not tied to a line
};

Problem load_problem(const std::string& path);

}  // namespace seqinfer
