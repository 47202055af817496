#include <map>

#include "lexeval/curation.hpp"
#include "lexeval/errors.hpp"
#include "lexeval/text.hpp"

namespace lexeval {

namespace {

constexpr std::string_view kTextMarker = ", with the text on it: ";

}  // namespace

std::string_view to_string(Difficulty difficulty) {
  switch (difficulty) {
    case Difficulty::Easy: return "easy";
    case Difficulty::Medium: return "medium";
    case Difficulty::Hard: return "hard";
  }
  return "easy";
}

std::optional<Difficulty> classify_difficulty(std::size_t word_count) {
  if (word_count >= 2 && word_count <= 4) return Difficulty::Easy;
  if (word_count >= 5 && word_count <= 9) return Difficulty::Medium;
  if (word_count >= 10 && word_count <= 14) return Difficulty::Hard;
  return std::nullopt;
}

std::size_t count_words(std::span<const std::string> texts) {
  std::size_t n = 0;
  for (const auto& t : texts) n += split_whitespace(t).size();
  return n;
}

void validate_bench_prompt(const BenchPrompt& p) {
  const std::string ctx = "bench prompt '" + p.id + "'";
  if (p.text_captions.empty()) throw DataError(ctx + ": no text captions");
  for (const auto& t : p.text_captions) {
    if (split_whitespace(t).empty()) throw DataError(ctx + ": empty text caption");
    if (t.find('"') != std::string::npos) throw DataError(ctx + ": text captions cannot contain '\"'");
  }
  const std::size_t words = count_words(p.text_captions);
  const auto tier = classify_difficulty(words);
  if (!tier) throw DataError(ctx + ": " + std::to_string(words) + " words is outside every difficulty tier");
  if (*tier != p.difficulty) {
    throw DataError(ctx + ": difficulty '" + std::string(to_string(p.difficulty)) + "' does not match " +
                    std::to_string(words) + " words");
  }
  if (p.conditions.empty()) return;
  if (p.difficulty != Difficulty::Easy) throw DataError(ctx + ": only easy prompts carry conditions");

  std::vector<bool> conditioned(p.text_captions.size(), false);
  std::map<std::size_t, std::string> font_by_pair;
  for (const auto& c : p.conditions) {
    if (c.word_index >= p.text_captions.size()) {
      throw DataError(ctx + ": condition text_index " + std::to_string(c.word_index) + " out of range");
    }
    if (conditioned[c.word_index]) {
      throw DataError(ctx + ": text " + std::to_string(c.word_index) + " has more than one condition");
    }
    conditioned[c.word_index] = true;
    if (!is_valid_condition_value(c.kind, c.value)) {
      throw DataError(ctx + ": '" + c.value + "' is not a valid " + std::string(to_string(c.kind)) + " condition");
    }
    if (c.kind == AttributeKind::Font) {
      const std::size_t pair = *font_pair_index(c.value);
      const auto [it, inserted] = font_by_pair.emplace(pair, c.value);
      if (!inserted && it->second != c.value) {
        throw DataError(ctx + ": opposing font styles '" + it->second + "' and '" + c.value +
                        "' cannot appear in the same prompt");
      }
    }
  }
}

std::string render_bench_prompt(const BenchPrompt& p) {
  validate_bench_prompt(p);

  std::vector<const AttributeCondition*> by_text(p.text_captions.size(), nullptr);
  for (const auto& c : p.conditions) by_text[c.word_index] = &c;

  std::string out = p.image_caption;
  out += kTextMarker;
  const std::string_view sep = p.conditions.empty() ? ", " : "; ";
  for (std::size_t i = 0; i < p.text_captions.size(); ++i) {
    if (i > 0) out += sep;
    out += '"';
    out += p.text_captions[i];
    out += '"';
    if (const AttributeCondition* c = by_text[i]) {
      switch (c->kind) {
        case AttributeKind::Color:
          out += " in ";
          out += c->value;
          break;
        case AttributeKind::Font:
          out += ", ";
          out += *font_description(c->value);
          break;
        case AttributeKind::Position:
          out += ", at the ";
          out += c->value;
          out += " of the image";
          break;
      }
    }
  }
  out += '.';
  return out;
}

BenchPrompt make_bench_prompt(std::string id,
                              std::string image_caption,
                              std::vector<std::string> text_captions,
                              std::vector<AttributeCondition> conditions) {
  BenchPrompt p;
  p.id = std::move(id);
  p.image_caption = std::move(image_caption);
  p.text_captions = std::move(text_captions);
  p.conditions = std::move(conditions);
  const std::size_t words = count_words(p.text_captions);
  const auto tier = classify_difficulty(words);
  if (!tier) {
    throw DataError("bench prompt '" + p.id + "': " + std::to_string(words) +
                    " words is outside every difficulty tier");
  }
  p.difficulty = *tier;
  p.rendered = render_bench_prompt(p);
  return p;
}

std::vector<std::string> parse_bench_prompt(std::string_view rendered) {
  std::vector<std::string> out;
  auto pos = rendered.find(std::string(kTextMarker) + '"');
  if (pos == std::string_view::npos) return out;
  pos += kTextMarker.size();
  while (true) {
    const auto open = rendered.find('"', pos);
    if (open == std::string_view::npos) break;
    const auto close = rendered.find('"', open + 1);
    if (close == std::string_view::npos) break;
    out.emplace_back(rendered.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
  return out;
}

Json bench_prompt_to_json(const BenchPrompt& p) {
  Json conditions = Json::array();
  for (const auto& c : p.conditions) {
    conditions.push_back({{"text_index", c.word_index}, {"kind", to_string(c.kind)}, {"value", c.value}});
  }
  return {{"id", p.id},
          {"image_caption", p.image_caption},
          {"text_captions", p.text_captions},
          {"conditions", std::move(conditions)},
          {"difficulty", to_string(p.difficulty)},
          {"word_count", count_words(p.text_captions)},
          {"prompt", p.rendered}};
}

BenchSource parse_bench_source(const Json& record, const std::string& context) {
  BenchSource s;
  s.id = require_string(record, "id", context);
  const std::string ctx = context + " (record '" + s.id + "')";
  s.image_caption = require_string(record, "image_caption", ctx);
  const Json& texts = require(record, "texts", ctx);
  if (!texts.is_array()) throw DataError(ctx + ": 'texts' must be an array");
  for (const auto& t : texts) {
    if (!t.is_string()) throw DataError(ctx + ": 'texts' entries must be strings");
    s.texts.push_back(t.get<std::string>());
  }
  if (const auto it = record.find("conditions"); it != record.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError(ctx + ": 'conditions' must be an array");
    for (const auto& c : *it) {
      if (!c.is_object()) throw DataError(ctx + ": conditions must be objects");
      const long long index = require_integer(c, "text_index", ctx);
      if (index < 0) throw DataError(ctx + ": negative text_index");
      const std::string kind = require_string(c, "kind", ctx);
      const auto parsed = parse_attribute_kind(kind);
      if (!parsed) throw DataError(ctx + ": unknown condition kind '" + kind + "'");
      s.conditions.push_back({static_cast<std::size_t>(index), *parsed, require_string(c, "value", ctx)});
    }
  }
  return s;
}

}  // namespace lexeval
