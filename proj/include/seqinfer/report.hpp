#pragma once

#include "seqinfer/induction.hpp"

#include <string>

namespace seqinfer {

// Slot id with its kind prefix as shown in skeleton text: "C0", "F1".
std::string slot_label(const Hypothesis& h, int slot);

// Human-readable inference report, one "key: value" line per field.
std::string text_report(const std::string& problem, const InferenceReport& rep);

// JSON inference report with a fixed key order; byte-identical across runs
// on the same input except for elapsed_seconds. Ends with a newline.
std::string json_report(const std::string& problem, const InferenceReport& rep);

}  // namespace seqinfer
