#include "seqinfer/report.hpp"

#include "json.hpp"

#include <sstream>

namespace seqinfer {

std::string slot_label(const Hypothesis& h, int slot) {
  const char* prefix =
      h.skeleton.kinds[static_cast<size_t>(slot)] == SlotKind::Numeric ? "C" : "F";
  return prefix + std::to_string(slot);
}

namespace {

const char* slot_kind_text(SlotKind k) {
  return k == SlotKind::Numeric ? "numeric" : "function";
}

}  // namespace

std::string text_report(const std::string& problem, const InferenceReport& rep) {
  const Hypothesis& h = rep.hypothesis;
  std::ostringstream out;
  out << "problem: " << problem << "\n";
  out << "k: " << h.k << "\n";
  out << "j0: " << h.j0 << "\n";
  out << "skeleton: " << skeleton_text(h) << "\n";
  for (size_t i = 0; i < h.laws.size(); ++i)
    out << "slot " << slot_label(h, static_cast<int>(i)) << ": "
        << slot_kind_text(h.skeleton.kinds[i]) << " " << law_text(h.laws[i]) << "\n";
  out << "nth-term: " << render_symbolic(h) << "\n";
  for (const Check& c : rep.checks)
    out << "check n=" << c.n << ": " << verdict_text(c.verdict) << "\n";
  out << "elapsed_seconds: " << rep.elapsed_seconds << "\n";
  return out.str();
}

std::string json_report(const std::string& problem, const InferenceReport& rep) {
  const Hypothesis& h = rep.hypothesis;
  nlohmann::ordered_json j;
  j["problem"] = problem;
  j["k"] = h.k;
  j["j0"] = h.j0;
  j["skeleton"] = skeleton_text(h);
  j["laws"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < h.laws.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["slot"] = slot_label(h, static_cast<int>(i));
    entry["kind"] = slot_kind_text(h.skeleton.kinds[i]);
    entry["law"] = law_text(h.laws[i]);
    j["laws"].push_back(std::move(entry));
  }
  j["symbolic"] = render_symbolic(h);
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : rep.checks) {
    nlohmann::ordered_json entry;
    entry["n"] = c.n;
    entry["verdict"] = verdict_text(c.verdict);
    j["checks"].push_back(std::move(entry));
  }
  j["elapsed_seconds"] = rep.elapsed_seconds;
  return j.dump(2) + "\n";
}

}  // namespace seqinfer
