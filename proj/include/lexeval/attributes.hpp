#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexeval/core.hpp"
#include "lexeval/ocr_metrics.hpp"

namespace lexeval {

inline constexpr double kDefaultCropMargin = 0.10;

struct ConditionMatch {
  std::size_t condition_index = 0;
  AttributeCondition condition;
  std::optional<OcrWord> word;  // none when the GT word found no close OCR word
};

// Pairs each conditioned GT word with at most one OCR word, using the optimal
// NED matching and discarding pairs above the threshold.
std::vector<ConditionMatch> fuzzy_match_conditions(const GroundTruthText& gt,
                                                   const OcrResult& ocr,
                                                   const MatchingPolicy& policy);
std::vector<ConditionMatch> fuzzy_match_conditions(const GroundTruthText& gt,
                                                   const OcrResult& ocr,
                                                   const WordMatching& matching,
                                                   const MatchingPolicy& policy);

// Grows each side by margin_frac times the box side, then clamps to the image.
BBox expand_crop(const BBox& bbox, ImageSize image, double margin_frac = kDefaultCropMargin);

// Membership of the box center in the named region of a thirds grid over the
// image: "top" is center_y < 1/3, "center" is both coordinates in [1/3, 2/3],
// corners are the conjunction of their two edges.
bool position_score(Position position, const BBox& bbox, ImageSize image);
bool position_score(std::string_view position, const BBox& bbox, ImageSize image);

struct JudgeQuery {
  std::string query_id;
  std::string sample_id;
  std::string question;
  BBox crop_bbox;
  std::vector<std::string> expected_answers;
  AttributeKind kind = AttributeKind::Color;
  std::string satisfying_answer;  // "yes", or the requested font
};

std::string render_color_question(std::string_view text, std::string_view color);
std::string render_font_question(std::string_view text,
                                 std::string_view font_a,
                                 std::string_view font_b);

// Question and expected answers for a color or font condition. Position
// conditions are scored geometrically and are rejected here.
JudgeQuery render_judge_query(const AttributeCondition& condition, std::string_view matched_word);

struct ParsedQuestion {
  AttributeKind kind = AttributeKind::Color;
  std::string text;
  std::string color;   // color questions
  std::string font_a;  // font questions
  std::string font_b;
};

// Inverse of the question templates; nullopt when `question` matches neither.
std::optional<ParsedQuestion> parse_judge_question(std::string_view question);

enum class ConditionState { Satisfied, Unsatisfied, Pending };

struct ConditionOutcome {
  std::string sample_id;
  std::size_t condition_index = 0;
  AttributeKind kind = AttributeKind::Color;
  ConditionState state = ConditionState::Unsatisfied;
  std::string query_id;  // set when state == Pending
};

// Everything attribute scoring needs for one sample: geometric verdicts for
// positions, unsatisfied verdicts for unmatched words, judge queries for the
// rest.
struct AttributePlan {
  std::vector<ConditionOutcome> outcomes;
  std::vector<JudgeQuery> queries;
};

AttributePlan plan_attribute_checks(const Sample& sample,
                                    const WordMatching& matching,
                                    const MatchingPolicy& policy,
                                    double crop_margin = kDefaultCropMargin);
AttributePlan plan_attribute_checks(const Sample& sample,
                                    const MatchingPolicy& policy,
                                    double crop_margin = kDefaultCropMargin);

// query_id -> answer, each id present at most once.
class AnswerBook {
 public:
  void add(std::string query_id, std::string answer);
  const std::string* find(std::string_view query_id) const;
  std::size_t size() const { return answers_.size(); }
  std::vector<std::string> query_ids() const;

 private:
  std::map<std::string, std::string, std::less<>> answers_;
};

// Tallies satisfied / total conditions per kind. Pending outcomes are resolved
// from `answers`. With `answers == nullptr` color and font conditions are left
// out entirely, so only position is scored.
AttributeTallies score_attributes(std::span<const ConditionOutcome> outcomes,
                                  std::span<const JudgeQuery> queries,
                                  const AnswerBook* answers);

void write_judge_requests(const std::filesystem::path& path, std::span<const JudgeQuery> queries);
std::vector<JudgeQuery> read_judge_requests(const std::filesystem::path& path);
AnswerBook read_judge_answers(const std::filesystem::path& path);

}  // namespace lexeval
