#include "lexeval/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "lexeval/errors.hpp"
#include "lexeval/io.hpp"
#include "lexeval/text.hpp"

namespace lexeval {

std::vector<ConditionMatch> fuzzy_match_conditions(const GroundTruthText& gt,
                                                   const OcrResult& ocr,
                                                   const WordMatching& matching,
                                                   const MatchingPolicy& policy) {
  std::vector<ConditionMatch> out;
  out.reserve(gt.conditions.size());
  for (std::size_t ci = 0; ci < gt.conditions.size(); ++ci) {
    const auto& condition = gt.conditions[ci];
    ConditionMatch m{ci, condition, std::nullopt};
    const auto it = std::find_if(matching.pairs.begin(), matching.pairs.end(),
                                 [&](const MatchedPair& p) { return p.gt_index == condition.word_index; });
    if (it != matching.pairs.end() && it->ned() <= policy.ned_threshold) m.word = ocr.words[it->ocr_index];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<ConditionMatch> fuzzy_match_conditions(const GroundTruthText& gt,
                                                   const OcrResult& ocr,
                                                   const MatchingPolicy& policy) {
  return fuzzy_match_conditions(gt, ocr, match_words(gt.words, ocr.texts()), policy);
}

BBox expand_crop(const BBox& bbox, ImageSize image, double margin_frac) {
  if (!(margin_frac >= 0.0) || !std::isfinite(margin_frac)) {
    throw std::invalid_argument("crop margin must be finite and non-negative");
  }
  if (!bbox.is_proper()) throw DataError("cannot crop around a zero-area bounding box");
  const double dx = margin_frac * bbox.width();
  const double dy = margin_frac * bbox.height();
  return clamp_to_image({bbox.x0 - dx, bbox.y0 - dy, bbox.x1 + dx, bbox.y1 + dy}, image);
}

bool position_score(Position position, const BBox& bbox, ImageSize image) {
  const double x = bbox.center_x() / image.width;
  const double y = bbox.center_y() / image.height;
  constexpr double kLow = 1.0 / 3.0;
  constexpr double kHigh = 2.0 / 3.0;
  const bool top = y < kLow;
  const bool bottom = y > kHigh;
  const bool left = x < kLow;
  const bool right = x > kHigh;
  switch (position) {
    case Position::Top: return top;
    case Position::Bottom: return bottom;
    case Position::Left: return left;
    case Position::Right: return right;
    case Position::UpperLeftCorner: return top && left;
    case Position::LowerLeftCorner: return bottom && left;
    case Position::UpperRightCorner: return top && right;
    case Position::LowerRightCorner: return bottom && right;
    case Position::Center: return !top && !bottom && !left && !right;
  }
  return false;
}

bool position_score(std::string_view position, const BBox& bbox, ImageSize image) {
  const auto parsed = parse_position(position);
  if (!parsed) throw DataError("unknown position '" + std::string(position) + "'");
  return position_score(*parsed, bbox, image);
}

std::string render_color_question(std::string_view text, std::string_view color) {
  std::string q = "The text \"";
  q += text;
  q += "\" is in the color of ";
  q += color;
  q += "? Answer me using \"yes\" or \"no\".";
  return q;
}

std::string render_font_question(std::string_view text, std::string_view font_a, std::string_view font_b) {
  std::string q = "The text \"";
  q += text;
  q += "\" is ";
  q += font_a;
  q += " or ";
  q += font_b;
  q += "? Answer me using either \"";
  q += font_a;
  q += "\" or \"";
  q += font_b;
  q += "\" only.";
  return q;
}

JudgeQuery render_judge_query(const AttributeCondition& condition, std::string_view matched_word) {
  JudgeQuery q;
  q.kind = condition.kind;
  switch (condition.kind) {
    case AttributeKind::Color:
      if (!is_color(condition.value)) throw DataError("unknown color '" + condition.value + "'");
      q.question = render_color_question(matched_word, condition.value);
      q.expected_answers = {"yes", "no"};
      q.satisfying_answer = "yes";
      break;
    case AttributeKind::Font: {
      const auto partner = font_partner(condition.value);
      if (!partner) throw DataError("unknown font '" + condition.value + "'");
      q.question = render_font_question(matched_word, condition.value, *partner);
      q.expected_answers = {condition.value, std::string(*partner)};
      q.satisfying_answer = condition.value;
      break;
    }
    case AttributeKind::Position:
      throw DataError("position conditions are scored geometrically, not by the judge");
  }
  return q;
}

std::optional<ParsedQuestion> parse_judge_question(std::string_view question) {
  constexpr std::string_view kPrefix = "The text \"";
  constexpr std::string_view kColorSuffix = "? Answer me using \"yes\" or \"no\".";
  constexpr std::string_view kColorMid = "\" is in the color of ";
  constexpr std::string_view kFontAsk = "? Answer me using either \"";
  constexpr std::string_view kFontOr = "\" or \"";
  constexpr std::string_view kFontSuffix = "\" only.";

  if (!question.starts_with(kPrefix)) return std::nullopt;
  std::string_view body = question.substr(kPrefix.size());

  if (body.ends_with(kColorSuffix)) {
    body.remove_suffix(kColorSuffix.size());
    const auto mid = body.rfind(kColorMid);
    if (mid == std::string_view::npos) return std::nullopt;
    ParsedQuestion p;
    p.kind = AttributeKind::Color;
    p.text = body.substr(0, mid);
    p.color = body.substr(mid + kColorMid.size());
    return p;
  }

  if (body.ends_with(kFontSuffix)) {
    const auto ask = body.rfind(kFontAsk);
    if (ask == std::string_view::npos) return std::nullopt;
    std::string_view options = body.substr(ask + kFontAsk.size());
    options.remove_suffix(kFontSuffix.size());
    const auto sep = options.find(kFontOr);
    if (sep == std::string_view::npos) return std::nullopt;
    ParsedQuestion p;
    p.kind = AttributeKind::Font;
    p.font_a = options.substr(0, sep);
    p.font_b = options.substr(sep + kFontOr.size());
    const std::string head_tail = "\" is " + p.font_a + " or " + p.font_b;
    const std::string_view head = body.substr(0, ask);
    if (!head.ends_with(head_tail)) return std::nullopt;
    p.text = head.substr(0, head.size() - head_tail.size());
    return p;
  }
  return std::nullopt;
}

AttributePlan plan_attribute_checks(const Sample& sample,
                                    const WordMatching& matching,
                                    const MatchingPolicy& policy,
                                    double crop_margin) {
  AttributePlan plan;
  for (auto& m : fuzzy_match_conditions(sample.gt, sample.ocr, matching, policy)) {
    ConditionOutcome outcome;
    outcome.sample_id = sample.id;
    outcome.condition_index = m.condition_index;
    outcome.kind = m.condition.kind;

    if (!m.word) {
      outcome.state = ConditionState::Unsatisfied;
    } else if (m.condition.kind == AttributeKind::Position) {
      outcome.state = position_score(m.condition.value, m.word->bbox, sample.ocr.image)
                          ? ConditionState::Satisfied
                          : ConditionState::Unsatisfied;
    } else {
      JudgeQuery q = render_judge_query(m.condition, m.word->text);
      q.query_id = sample.id + "#" + std::to_string(m.condition_index);
      q.sample_id = sample.id;
      q.crop_bbox = expand_crop(m.word->bbox, sample.ocr.image, crop_margin);
      outcome.state = ConditionState::Pending;
      outcome.query_id = q.query_id;
      plan.queries.push_back(std::move(q));
    }
    plan.outcomes.push_back(std::move(outcome));
  }
  return plan;
}

AttributePlan plan_attribute_checks(const Sample& sample, const MatchingPolicy& policy, double crop_margin) {
  return plan_attribute_checks(sample, match_words(sample.gt.words, sample.ocr.texts()), policy, crop_margin);
}

void AnswerBook::add(std::string query_id, std::string answer) {
  const auto [it, inserted] = answers_.emplace(std::move(query_id), std::move(answer));
  if (!inserted) throw DataError("duplicate judge answer for query '" + it->first + "'");
}

const std::string* AnswerBook::find(std::string_view query_id) const {
  const auto it = answers_.find(query_id);
  return it == answers_.end() ? nullptr : &it->second;
}

std::vector<std::string> AnswerBook::query_ids() const {
  std::vector<std::string> out;
  out.reserve(answers_.size());
  for (const auto& [id, _] : answers_) out.push_back(id);
  return out;
}

namespace {

std::string fold_answer(std::string_view answer) {
  const auto first = answer.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = answer.find_last_not_of(" \t\r\n");
  std::u32string cps = decode_utf8(answer.substr(first, last - first + 1));
  std::transform(cps.begin(), cps.end(), cps.begin(), fold_case);
  return encode_utf8(cps);
}

}  // namespace

AttributeTallies score_attributes(std::span<const ConditionOutcome> outcomes,
                                  std::span<const JudgeQuery> queries,
                                  const AnswerBook* answers) {
  std::map<std::string_view, const JudgeQuery*> by_id;
  for (const auto& q : queries) by_id[q.query_id] = &q;

  AttributeTallies tallies;
  for (const auto& o : outcomes) {
    // Without a judge, color and font stay unscored rather than counted as misses.
    if (!answers && o.kind != AttributeKind::Position) continue;

    auto& tally = tallies[o.kind];
    ++tally.total;
    if (o.state == ConditionState::Satisfied) {
      ++tally.satisfied;
      continue;
    }
    if (o.state == ConditionState::Unsatisfied) continue;

    const auto qit = by_id.find(o.query_id);
    if (qit == by_id.end()) throw DataError("no judge query with id '" + o.query_id + "'");
    const JudgeQuery& q = *qit->second;
    const std::string* answer = answers->find(q.query_id);
    if (!answer) throw DataError("no judge answer for query '" + q.query_id + "'");
    const std::string folded = fold_answer(*answer);
    const bool expected = std::any_of(q.expected_answers.begin(), q.expected_answers.end(),
                                      [&](const std::string& e) { return fold_answer(e) == folded; });
    if (!expected) {
      throw DataError("judge answer '" + *answer + "' for query '" + q.query_id +
                      "' is not one of the expected answers");
    }
    if (folded == fold_answer(q.satisfying_answer)) ++tally.satisfied;
  }
  return tallies;
}

void write_judge_requests(const std::filesystem::path& path, std::span<const JudgeQuery> queries) {
  std::vector<Json> records;
  records.reserve(queries.size());
  for (const auto& q : queries) {
    records.push_back({{"query_id", q.query_id},
                       {"sample_id", q.sample_id},
                       {"question", q.question},
                       {"crop_bbox", Json::array({q.crop_bbox.x0, q.crop_bbox.y0, q.crop_bbox.x1, q.crop_bbox.y1})},
                       {"expected_answers", q.expected_answers}});
  }
  write_jsonl_atomic(path, records);
}

std::vector<JudgeQuery> read_judge_requests(const std::filesystem::path& path) {
  std::vector<JudgeQuery> out;
  for_each_jsonl(path, [&](std::size_t line, const Json& r) {
    const std::string ctx = path.filename().string() + " line " + std::to_string(line);
    JudgeQuery q;
    q.query_id = require_string(r, "query_id", ctx);
    q.sample_id = require_string(r, "sample_id", ctx);
    q.question = require_string(r, "question", ctx);
    const Json& box = require(r, "crop_bbox", ctx);
    if (!box.is_array() || box.size() != 4) throw DataError(ctx + ": crop_bbox must be [x0, y0, x1, y1]");
    for (const auto& x : box) {
      if (!x.is_number()) throw DataError(ctx + ": crop_bbox entries must be numbers");
    }
    q.crop_bbox = {box[0].get<double>(), box[1].get<double>(), box[2].get<double>(), box[3].get<double>()};
    const Json& expected = require(r, "expected_answers", ctx);
    if (!expected.is_array()) throw DataError(ctx + ": expected_answers must be an array");
    for (const auto& e : expected) {
      if (!e.is_string()) throw DataError(ctx + ": expected_answers entries must be strings");
      q.expected_answers.push_back(e.get<std::string>());
    }
    const auto parsed = parse_judge_question(q.question);
    if (!parsed) throw DataError(ctx + ": question does not match a known template");
    q.kind = parsed->kind;
    q.satisfying_answer = parsed->kind == AttributeKind::Color ? "yes" : parsed->font_a;
    out.push_back(std::move(q));
  });
  return out;
}

AnswerBook read_judge_answers(const std::filesystem::path& path) {
  AnswerBook book;
  for_each_jsonl(path, [&](std::size_t line, const Json& r) {
    const std::string ctx = path.filename().string() + " line " + std::to_string(line);
    book.add(require_string(r, "query_id", ctx), require_string(r, "answer", ctx));
  });
  return book;
}

}  // namespace lexeval
