#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexeval/core.hpp"
#include "lexeval/io.hpp"

namespace lexeval {

// ---------------------------------------------------------------------------
// Seed captions
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxSeedWords = 15;     // kept captions have fewer words
inline constexpr std::size_t kVerboseSeedWords = 50; // above this a caption is "verbose"

enum class SeedReason { Kept, Empty, Meaningless, Verbose, Long };

std::string_view to_string(SeedReason reason);

struct SeedVerdict {
  bool keep = false;
  SeedReason reason = SeedReason::Empty;
  std::size_t word_count = 0;
};

SeedVerdict filter_seed_caption(std::string_view caption);

// ---------------------------------------------------------------------------
// Best-of-N and text area filtering
// ---------------------------------------------------------------------------

inline constexpr double kDefaultQualityWeight = 2.0;
inline constexpr double kDefaultAestheticWeight = 1.0;
inline constexpr double kDefaultMinTextArea = 4000.0;

struct Candidate {
  std::string group_id;
  std::int64_t candidate_id = 0;
  double quality = 0;
  double aesthetic = 0;
  OcrResult ocr;
  std::optional<std::string> caption;  // forwarded to recaption requests
  std::optional<std::string> image;
};

struct CandidateGroup {
  std::string group_id;
  std::vector<Candidate> candidates;
};

struct ScoreWeights {
  double quality = kDefaultQualityWeight;
  double aesthetic = kDefaultAestheticWeight;

  double score(const Candidate& c) const { return quality * c.quality + aesthetic * c.aesthetic; }
};

struct Selection {
  std::size_t index = 0;  // into the group
  double score = 0;
};

// Highest weighted score; ties go to the lowest candidate_id.
Selection select_best_of_n(std::span<const Candidate> group, const ScoreWeights& weights = {});

struct AreaVerdict {
  bool keep = false;
  double max_area = 0;  // 0 when there are no OCR words
};

// Drops the candidate when its largest text box is strictly smaller than
// `min_area_px`. No OCR words means no text region, so it is dropped.
AreaVerdict filter_small_text(const Candidate& candidate, double min_area_px = kDefaultMinTextArea);

struct FilterRecord {
  std::string group_id;
  std::optional<std::int64_t> winner_id;
  std::optional<double> winning_score;
  std::optional<double> max_text_area;
  bool kept = false;
  std::string reason;  // "kept", "area" or "empty_group"
};

FilterRecord curate_group(const CandidateGroup& group,
                          const ScoreWeights& weights = {},
                          double min_area_px = kDefaultMinTextArea);

// Accepts both flat candidate lines and `{"group_id", "candidates": [...]}`
// lines. Groups come back in order of first appearance.
std::vector<CandidateGroup> load_candidate_groups(const std::filesystem::path& path,
                                                  NormalizationPolicy policy);
Candidate parse_candidate(const Json& record, NormalizationPolicy policy, const std::string& context);
Json filter_record_to_json(const FilterRecord& record);

// ---------------------------------------------------------------------------
// Instruction templates for external LLM adapters
// ---------------------------------------------------------------------------

enum class InstructionKind { Enhancer, Recaption, Refinement };

std::string_view to_string(InstructionKind kind);
std::optional<InstructionKind> parse_instruction_kind(std::string_view name);
std::vector<std::string_view> required_slots(InstructionKind kind);

using Slots = std::map<std::string, std::string, std::less<>>;

// Throws DataError naming the first missing slot.
std::string render_instruction(InstructionKind kind, const Slots& slots);

// `"AREA", "PEOPLE"`
std::string format_quoted_list(std::span<const std::string> texts);

struct LlmRequest {
  std::string request_id;
  InstructionKind kind = InstructionKind::Enhancer;
  std::string instruction;
  std::optional<std::string> image;
};

void write_llm_requests(const std::filesystem::path& path, std::span<const LlmRequest> requests);
std::vector<LlmRequest> read_llm_requests(const std::filesystem::path& path);
std::map<std::string, std::string> read_llm_responses(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Benchmark prompts
// ---------------------------------------------------------------------------

enum class Difficulty { Easy, Medium, Hard };

std::string_view to_string(Difficulty difficulty);

// 2-4 words easy, 5-9 medium, 10-14 hard, anything else nullopt.
std::optional<Difficulty> classify_difficulty(std::size_t word_count);

struct BenchPrompt {
  std::string id;
  std::string image_caption;
  std::vector<std::string> text_captions;
  std::vector<AttributeCondition> conditions;  // word_index indexes text_captions
  Difficulty difficulty = Difficulty::Easy;
  std::string rendered;
};

std::size_t count_words(std::span<const std::string> texts);

// Validates the tier, the condition vocabulary and the font pairing rule.
// Throws DataError on violation.
void validate_bench_prompt(const BenchPrompt& prompt);

std::string render_bench_prompt(const BenchPrompt& prompt);

// Builds, validates and renders a prompt. Throws DataError when the word
// count falls outside every tier or a condition is invalid.
BenchPrompt make_bench_prompt(std::string id,
                              std::string image_caption,
                              std::vector<std::string> text_captions,
                              std::vector<AttributeCondition> conditions = {});

// Quoted text captions of a rendered prompt, in order.
std::vector<std::string> parse_bench_prompt(std::string_view rendered);

Json bench_prompt_to_json(const BenchPrompt& prompt);

// One input record for benchmark construction:
// {"id", "image_caption", "texts": [str], "conditions": [{"text_index", "kind", "value"}]?}
struct BenchSource {
  std::string id;
  std::string image_caption;
  std::vector<std::string> texts;
  std::vector<AttributeCondition> conditions;
};

BenchSource parse_bench_source(const Json& record, const std::string& context);

}  // namespace lexeval
