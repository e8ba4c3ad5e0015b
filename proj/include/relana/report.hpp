#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relana/baire.hpp"
#include "relana/detect.hpp"
#include "relana/relation.hpp"

namespace relana {

inline constexpr const char* kToolName = "relana";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
  int max_n = 4;
  std::size_t max_k = 12;
  std::size_t max_d = 6;
  std::size_t ladder_depth = 4;
  std::size_t tail = 0;  // 0: auto, max(2, ceil(m/4)) clamped to m
  std::uint64_t budget = 10'000'000;
  std::optional<std::vector<std::size_t>> row_order;
};

// Full analysis of one relation. When a row order is given the analysis runs
// on the reordered relation, so all row indices in the report are positions
// within the analyzed sequence.
struct AnalysisReport {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::uint64_t hash = 0;  // over the analyzed relation
  AnalyzeOptions opts;     // tail resolved

  std::size_t type_count = 0;
  std::vector<std::size_t> type_multiplicity;

  std::optional<PatternSpec> avoided;
  bool avoided_vacuous = false;
  AlternationResult alternation;
  LadderResult ladder;
  VCResult vc;
  std::optional<SOPGuaranteeWitness> sop;
  LimitClassification limit;
  DoubleLimitResult double_limit;

  // composite: an order witness forces either a shattering witness or a
  // consistency-flip witness at this scale
  std::string shelah_branch;  // "swap" | "ip" | "none"
  std::optional<SwapWitness> swap;

  bool witnesses_verified = false;

  std::string to_text() const;
};

AnalysisReport analyze(const BitRelation& rel, const AnalyzeOptions& opts);

std::size_t default_tail(std::size_t m);

}  // namespace relana
