#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lexeval/core.hpp"
#include "lexeval/pned.hpp"

namespace lexeval {

// A matched pair counts as a hit when its NED is at most `ned_threshold`.
struct MatchingPolicy {
  double ned_threshold = 0.3;

  void validate() const;
};

std::size_t count_hits(const WordMatching& matching, const MatchingPolicy& policy);

// Hits / |gt|; 1 when gt is empty.
double recall(std::span<const std::string> gt,
              std::span<const std::string> ocr,
              const MatchingPolicy& policy = {});
double recall(const WordMatching& matching, const MatchingPolicy& policy);

struct PrecisionF1 {
  double precision = 0;
  double f1 = 0;
};

double f1_score(double precision, double recall);

// Hits / |ocr|; 1 when ocr is empty.
PrecisionF1 precision_and_f1(std::span<const std::string> gt,
                             std::span<const std::string> ocr,
                             const MatchingPolicy& policy = {});
PrecisionF1 precision_and_f1(const WordMatching& matching, const MatchingPolicy& policy);

// Every GT word found verbatim by a distinct OCR word; extra OCR words allowed.
bool sentence_exact(std::span<const std::string> gt, std::span<const std::string> ocr);

// Size of the multiset intersection divided by |gt|; 1 when gt is empty.
double word_accuracy(std::span<const std::string> gt, std::span<const std::string> ocr);

// All OCR metrics for one sample from a single matrix solve. Attribute
// scores are filled in separately.
SampleReport evaluate_sample(const Sample& sample, const MatchingPolicy& policy);

AggregateReport aggregate(std::vector<SampleReport> reports);

}  // namespace lexeval
