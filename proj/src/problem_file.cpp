#include "seqinfer/problem_file.hpp"

#include "seqinfer/parse.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace seqinfer {

ProblemFileError::ProblemFileError(const std::string& file, int line, const std::string& msg)
    : std::runtime_error(line > 0 ? file + ":" + std::to_string(line) + ": " + msg
                                  : file + ": " + msg),
      file(file),
      line(line) {}

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError(path, 0, "cannot open file");

  Problem p;
  p.name = std::filesystem::path(path).stem().string();

  std::string raw;
  int lineno = 0;
  bool saw_expression = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (line[0] == '@') {
      if (saw_expression)
        throw ProblemFileError(path, lineno, "directives must precede expression lines");
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      rest = b == std::string::npos ? "" : rest.substr(b);
      if (key == "@first_index") {
        try {
          size_t used = 0;
          p.first_index = std::stoll(rest, &used);
          if (used != rest.size()) throw std::invalid_argument(rest);
        } catch (const std::exception&) {
          throw ProblemFileError(path, lineno, "@first_index needs an integer, got '" + rest + "'");
        }
      } else if (key == "@generator") {
        if (rest.empty()) throw ProblemFileError(path, lineno, "@generator needs an expression");
        try {
          p.generator = parse(rest);
        } catch (const ParseError& e) {
          throw ProblemFileError(path, lineno, std::string("in @generator: ") + e.what());
        }
      } else {
        throw ProblemFileError(path, lineno, "unknown directive '" + key + "'");
      }
      continue;
    }

    try {
      p.observations.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ProblemFileError(path, lineno, e.what());
    }
    p.lines.push_back(lineno);
    saw_expression = true;
  }

  if (p.observations.size() < 3)
    throw ProblemFileError(path, lineno,
                           "need at least 3 expression lines, found " +
                               std::to_string(p.observations.size()));
  return p;
}

}  // namespace seqinfer
