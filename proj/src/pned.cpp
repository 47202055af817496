#include "lexeval/pned.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "lexeval/assignment.hpp"
#include "lexeval/text.hpp"

namespace lexeval {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// NED values are ratios of small integers. Summing them exactly makes the
// result a function of the matched cost multiset's true sum, so argument
// order, list order and the choice among tied optima cannot move the last bit.
Rational exact_matched_cost(const WordMatching& m) {
  Rational sum = 0;
  for (const auto& p : m.pairs) {
    if (p.cost.length != 0) sum += Rational(p.cost.distance, p.cost.length);
  }
  return sum;
}

std::size_t unmatched_count(const WordMatching& m) {
  return m.gt_count > m.ocr_count ? m.gt_count - m.ocr_count : m.ocr_count - m.gt_count;
}

}  // namespace

double WordMatching::matched_cost() const {
  return exact_matched_cost(*this).convert_to<double>();
}

WordMatching match_words(std::span<const std::string> gt, std::span<const std::string> ocr) {
  WordMatching matching;
  matching.gt_count = gt.size();
  matching.ocr_count = ocr.size();
  if (gt.empty() || ocr.empty()) return matching;

  std::vector<std::u32string> gt_cps, ocr_cps;
  gt_cps.reserve(gt.size());
  ocr_cps.reserve(ocr.size());
  for (const auto& w : gt) gt_cps.push_back(decode_utf8(w));
  for (const auto& w : ocr) ocr_cps.push_back(decode_utf8(w));

  std::vector<NedRatio> ratios(gt.size() * ocr.size());
  CostMatrix costs(gt.size(), ocr.size());
  for (std::size_t i = 0; i < gt.size(); ++i) {
    for (std::size_t j = 0; j < ocr.size(); ++j) {
      ratios[i * ocr.size() + j] = ned_ratio(gt_cps[i], ocr_cps[j]);
      costs(i, j) = ratios[i * ocr.size() + j].value();
    }
  }

  const Assignment assignment = solve_min_assignment(costs);
  matching.pairs.reserve(assignment.pairs.size());
  for (const auto& [r, c] : assignment.pairs) {
    matching.pairs.push_back({r, c, ratios[r * ocr.size() + c]});
  }
  return matching;
}

double pned_total(const WordMatching& matching, double unmatched_penalty) {
  Rational total = exact_matched_cost(matching);
  total += Rational(unmatched_penalty) * static_cast<long long>(unmatched_count(matching));
  return total.convert_to<double>();
}

PnedBreakdown pned(std::span<const std::string> gt,
                   std::span<const std::string> ocr,
                   const WordMatching& matching,
                   double unmatched_penalty) {
  PnedBreakdown out;
  out.matched_cost = matching.matched_cost();
  out.unmatched_penalty = static_cast<double>(unmatched_count(matching)) * unmatched_penalty;
  out.total = pned_total(matching, unmatched_penalty);
  out.matched_pairs.reserve(matching.pairs.size());
  for (const auto& p : matching.pairs) {
    out.matched_pairs.push_back({gt[p.gt_index], ocr[p.ocr_index], p.ned()});
  }
  return out;
}

PnedBreakdown pned(std::span<const std::string> gt, std::span<const std::string> ocr) {
  return pned(gt, ocr, match_words(gt, ocr));
}

}  // namespace lexeval
