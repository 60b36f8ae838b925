#include "seqinfer/derivative.hpp"
#include "seqinfer/emit.hpp"
#include "seqinfer/induction.hpp"
#include "seqinfer/parse.hpp"
#include "seqinfer/problem_file.hpp"
#include "seqinfer/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace seqinfer;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool any_mismatch(const InferenceReport& rep) {
  return std::any_of(rep.checks.begin(), rep.checks.end(),
                     [](const Check& c) { return c.verdict == Verdict::Mismatch; });
}

int cmd_infer(const std::string& file, const std::optional<long long>& n, int extra,
              const std::string& format, const std::optional<long long>& first_index) {
  Problem p;
  try {
    p = load_problem(file);
  } catch (const ProblemFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (first_index) p.first_index = *first_index;

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Hypothesis h = induce(p.observations, p.first_index);
    InferenceReport rep = validate(h, p.generator, p.observations, extra);
    rep.elapsed_seconds = seconds_since(t0);

    std::cout << (format == "structured" ? json_report(p.name, rep) : text_report(p.name, rep));
    if (n) std::cout << emit(instantiate(h, *n)) << "\n";
    return any_mismatch(rep) ? 2 : 0;
  } catch (const ShapeMismatchError& e) {
    int line = e.index >= 0 && static_cast<size_t>(e.index) < p.lines.size()
                   ? p.lines[static_cast<size_t>(e.index)]
                   : 0;
    std::cerr << "error: " << file << ":" << line << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    // NoLawFoundError, IndexOutOfRangeError, UnsupportedExprError, ...
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 1;
  }
}

int cmd_diff(const std::string& text, int order) {
  try {
    Expr e = parse(text);
    std::vector<Expr> seq = derivative_sequence(e, order);
    std::cout << emit(seq.back()) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

struct BenchRow {
  std::string name;
  bool is_file = false;
  std::string source;  // generator text or file path
};

int cmd_bench(const std::string& dir, int k, int extra) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return 1;
  }

  std::vector<BenchRow> rows;
  const fs::path gen_list = fs::path(dir) / "generators.txt";
  if (fs::exists(gen_list)) {
    std::ifstream in(gen_list);
    std::string raw;
    while (std::getline(in, raw)) {
      std::string line = raw.substr(0, raw.find('#'));
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      rows.push_back({line, false, line});
    }
  }
  std::vector<fs::path> probs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".prob")
      probs.push_back(entry.path());
  std::sort(probs.begin(), probs.end());
  for (const auto& path : probs) rows.push_back({path.stem().string(), true, path.string()});

  if (rows.empty()) {
    std::cerr << "error: " << dir << " holds no generators.txt entries and no .prob files\n";
    return 1;
  }

  bool any_fail = false;
  double max_elapsed = 0.0;
  for (const BenchRow& row : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    int matched = 0;
    int total = 0;
    try {
      Hypothesis h;
      InferenceReport rep;
      if (row.is_file) {
        Problem p = load_problem(row.source);
        h = induce(p.observations, p.first_index);
        rep = validate(h, p.generator, p.observations, extra);
      } else {
        Expr g = parse(row.source);
        std::vector<Expr> obs = derivative_sequence(g, k);
        h = induce(obs, 1);
        rep = validate(h, g, obs, extra);
      }
      total = static_cast<int>(rep.checks.size());
      for (const Check& c : rep.checks)
        if (c.verdict != Verdict::Mismatch) ++matched;
      ok = matched == total;
      if (!ok) note = "mismatched checks";
    } catch (const std::exception& e) {
      note = e.what();
    }
    const double elapsed = seconds_since(t0);
    max_elapsed = std::max(max_elapsed, elapsed);
    if (!ok) any_fail = true;

    std::cout << "bench " << row.name << ": " << (ok ? "PASS" : "FAIL") << "  checks " << matched
              << "/" << total << "  elapsed " << elapsed << "s";
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
  }

  std::cout << "bench max elapsed: " << max_elapsed << "s (bound 30s)\n";
  if (max_elapsed >= 30.0) {
    std::cerr << "error: slowest problem exceeded the 30s bound\n";
    any_fail = true;
  }
  return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inductive inference of the nth derivative of a symbolic sequence"};
  app.require_subcommand(1);

  auto* infer = app.add_subcommand("infer", "infer the nth-term law of a problem file");
  std::string infer_file;
  infer->add_option("file", infer_file, "problem file (.prob)")->required();
  long long n_value = 0;
  CLI::Option* n_opt = infer->add_option("--n", n_value, "also print sequence member n");
  int infer_extra = 3;
  infer->add_option("--extra", infer_extra, "extrapolated oracle checks (default 3)")
      ->check(CLI::NonNegativeNumber);
  std::string format = "text";
  infer->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  long long first_index_value = 1;
  CLI::Option* fi_opt =
      infer->add_option("--first-index", first_index_value, "override @first_index");

  auto* diff = app.add_subcommand("diff", "print the kth derivative of an expression");
  std::string diff_expr;
  diff->add_option("expression", diff_expr, "expression text")->required();
  int order = 1;
  diff->add_option("--order", order, "derivative order (default 1)")
      ->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "run a directory of problems");
  std::string bench_dir;
  bench->add_option("dir", bench_dir, "suite directory")->required();
  int bench_k = 5;
  bench->add_option("--k", bench_k, "observations per generator (default 5)")
      ->check(CLI::Range(3, 64));
  int bench_extra = 3;
  bench->add_option("--extra", bench_extra, "extrapolated oracle checks (default 3)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (*infer)
    return cmd_infer(infer_file,
                     *n_opt ? std::optional<long long>(n_value) : std::nullopt, infer_extra,
                     format, *fi_opt ? std::optional<long long>(first_index_value) : std::nullopt);
  if (*diff) return cmd_diff(diff_expr, order);
  if (*bench) return cmd_bench(bench_dir, bench_k, bench_extra);
  return 1;
}
