#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lexeval/editdist.hpp"

namespace lexeval {

struct MatchedPair {
  std::size_t gt_index = 0;
  std::size_t ocr_index = 0;
  NedRatio cost;

  double ned() const { return cost.value(); }
};

// Optimal one-to-one matching between two word lists under NED costs.
// Words are treated as multiset elements: duplicates stay distinct.
struct WordMatching {
  std::vector<MatchedPair> pairs;  // sorted by gt_index, size min(n, m)
  std::size_t gt_count = 0;
  std::size_t ocr_count = 0;

  // Sum of matched NED costs, evaluated exactly and rounded once. Any two
  // optimal matchings of the same inputs give the same value.
  double matched_cost() const;
};

WordMatching match_words(std::span<const std::string> gt, std::span<const std::string> ocr);

struct PnedPair {
  std::string gt_word;
  std::string ocr_word;
  double ned = 0;
};

struct PnedBreakdown {
  double matched_cost = 0;       // M
  double unmatched_penalty = 0;  // U = |n - m| * penalty
  double total = 0;              // M + U
  std::vector<PnedPair> matched_pairs;
};

// Set-to-set word distance: optimal NED matching plus a penalty of
// `unmatched_penalty` per word left over on the larger side. Both-empty
// input scores 0.
PnedBreakdown pned(std::span<const std::string> gt, std::span<const std::string> ocr);
PnedBreakdown pned(std::span<const std::string> gt,
                   std::span<const std::string> ocr,
                   const WordMatching& matching,
                   double unmatched_penalty = 1.0);

// Total only, with a configurable penalty.
double pned_total(const WordMatching& matching, double unmatched_penalty = 1.0);

}  // namespace lexeval
