#include "lexeval/ocr_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lexeval/curation.hpp"
#include "lexeval/errors.hpp"

namespace lexeval {

void MatchingPolicy::validate() const {
  if (!(ned_threshold >= 0.0 && ned_threshold <= 1.0)) {
    throw std::invalid_argument("ned_threshold must lie in [0, 1]");
  }
}

std::size_t count_hits(const WordMatching& matching, const MatchingPolicy& policy) {
  policy.validate();
  return static_cast<std::size_t>(std::count_if(
      matching.pairs.begin(), matching.pairs.end(),
      [&](const MatchedPair& p) { return p.ned() <= policy.ned_threshold; }));
}

double recall(const WordMatching& matching, const MatchingPolicy& policy) {
  if (matching.gt_count == 0) return 1.0;
  return static_cast<double>(count_hits(matching, policy)) / static_cast<double>(matching.gt_count);
}

double recall(std::span<const std::string> gt, std::span<const std::string> ocr, const MatchingPolicy& policy) {
  return recall(match_words(gt, ocr), policy);
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

PrecisionF1 precision_and_f1(const WordMatching& matching, const MatchingPolicy& policy) {
  const std::size_t hits = count_hits(matching, policy);
  const double p = matching.ocr_count == 0
                       ? 1.0
                       : static_cast<double>(hits) / static_cast<double>(matching.ocr_count);
  const double r = matching.gt_count == 0
                       ? 1.0
                       : static_cast<double>(hits) / static_cast<double>(matching.gt_count);
  return {p, f1_score(p, r)};
}

PrecisionF1 precision_and_f1(std::span<const std::string> gt,
                             std::span<const std::string> ocr,
                             const MatchingPolicy& policy) {
  return precision_and_f1(match_words(gt, ocr), policy);
}

namespace {

std::size_t exact_overlap(std::span<const std::string> gt, std::span<const std::string> ocr) {
  std::map<std::string_view, std::size_t> available;
  for (const auto& w : ocr) ++available[w];
  std::size_t found = 0;
  for (const auto& w : gt) {
    auto it = available.find(w);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++found;
    }
  }
  return found;
}

}  // namespace

bool sentence_exact(std::span<const std::string> gt, std::span<const std::string> ocr) {
  return exact_overlap(gt, ocr) == gt.size();
}

double word_accuracy(std::span<const std::string> gt, std::span<const std::string> ocr) {
  if (gt.empty()) return 1.0;
  return static_cast<double>(exact_overlap(gt, ocr)) / static_cast<double>(gt.size());
}

SampleReport evaluate_sample(const Sample& sample, const MatchingPolicy& policy) {
  const auto& gt = sample.gt.words;
  const auto ocr = sample.ocr.texts();
  const WordMatching matching = match_words(gt, ocr);

  SampleReport r;
  r.sample_id = sample.id;
  r.gt_word_count = gt.size();
  r.ocr_word_count = ocr.size();
  r.pned = pned_total(matching);
  r.recall = recall(matching, policy);
  const PrecisionF1 pf = precision_and_f1(matching, policy);
  r.precision = pf.precision;
  r.ocr_f1 = pf.f1;
  r.word_accuracy = word_accuracy(gt, ocr);
  r.sentence_exact = sentence_exact(gt, ocr);
  return r;
}

namespace {

template <typename Get>
MetricSummary summarize(const std::vector<SampleReport>& reports, Get get) {
  MetricSummary s;
  const double n = static_cast<double>(reports.size());
  double sum = 0;
  for (const auto& r : reports) sum += get(r);
  s.mean = sum / n;
  if (reports.size() > 1) {
    double sq = 0;
    for (const auto& r : reports) {
      const double d = get(r) - s.mean;
      sq += d * d;
    }
    s.std = std::sqrt(sq / (n - 1.0));
  }
  return s;
}

}  // namespace

AggregateReport aggregate(std::vector<SampleReport> reports) {
  AggregateReport out;
  out.count = reports.size();
  for (const auto& r : reports) {
    const auto tier = classify_difficulty(r.gt_word_count);
    if (!tier) {
      ++out.tiers.out_of_range;
    } else {
      switch (*tier) {
        case Difficulty::Easy: ++out.tiers.easy; break;
        case Difficulty::Medium: ++out.tiers.medium; break;
        case Difficulty::Hard: ++out.tiers.hard; break;
      }
    }
    out.attributes += r.attributes;
  }
  if (!reports.empty()) {
    MetricSummaries m;
    m.pned = summarize(reports, [](const SampleReport& r) { return r.pned; });
    m.recall = summarize(reports, [](const SampleReport& r) { return r.recall; });
    m.precision = summarize(reports, [](const SampleReport& r) { return r.precision; });
    m.ocr_f1 = summarize(reports, [](const SampleReport& r) { return r.ocr_f1; });
    m.word_accuracy = summarize(reports, [](const SampleReport& r) { return r.word_accuracy; });
    m.sentence_accuracy =
        summarize(reports, [](const SampleReport& r) { return r.sentence_exact ? 1.0 : 0.0; });
    out.metrics = m;
  }
  out.samples = std::move(reports);
  return out;
}

}  // namespace lexeval
