#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lexeval/curation.hpp"
#include "lexeval/errors.hpp"
#include "temp_dir.hpp"

using namespace lexeval;

namespace {

std::string words(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (i ? " w" : "w") + std::to_string(i);
  return s;
}

Candidate candidate(std::int64_t id, double q, double a, std::vector<BBox> boxes = {}) {
  Candidate c;
  c.group_id = "g";
  c.candidate_id = id;
  c.quality = q;
  c.aesthetic = a;
  c.ocr.image = {1024, 1024};
  for (const auto& b : boxes) c.ocr.words.push_back({"text", b, 1.0});
  return c;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(LEXEVAL_GOLDEN_DIR) / name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Seeds, Rules) {
  EXPECT_EQ(filter_seed_caption("*").reason, SeedReason::Meaningless);
  EXPECT_EQ(filter_seed_caption("   ").reason, SeedReason::Empty);
  EXPECT_TRUE(filter_seed_caption(words(14)).keep);
  EXPECT_EQ(filter_seed_caption(words(15)).reason, SeedReason::Long);
  EXPECT_EQ(filter_seed_caption(words(50)).reason, SeedReason::Long);
  EXPECT_EQ(filter_seed_caption(words(51)).reason, SeedReason::Verbose);
  EXPECT_TRUE(filter_seed_caption("カフェ 看板").keep);
  EXPECT_EQ(filter_seed_caption(words(3)).word_count, 3u);
}

TEST(BestOfN, WeightedArgmax) {
  const std::vector<Candidate> group{candidate(1, 4.2, 3.0), candidate(2, 3.9, 4.0)};
  EXPECT_DOUBLE_EQ(ScoreWeights{}.score(group[0]), 11.4);
  const Selection s = select_best_of_n(group);
  EXPECT_EQ(s.index, 1u);
  EXPECT_DOUBLE_EQ(s.score, 11.8);
  // Quality alone favours the first candidate.
  EXPECT_EQ(select_best_of_n(group, {1, 0}).index, 0u);
}

TEST(BestOfN, SingletonAndTies) {
  EXPECT_EQ(select_best_of_n(std::vector<Candidate>{candidate(9, 1, 1)}).index, 0u);
  const std::vector<Candidate> tied{candidate(7, 1, 1), candidate(3, 1, 1), candidate(5, 1, 1)};
  EXPECT_EQ(select_best_of_n(tied).index, 1u);
  EXPECT_THROW(select_best_of_n(std::vector<Candidate>{}), DataError);
}

TEST(AreaFilter, Boundary) {
  EXPECT_TRUE(filter_small_text(candidate(1, 0, 0, {{0, 0, 80, 50}})).keep);
  EXPECT_FALSE(filter_small_text(candidate(1, 0, 0, {{0, 0, 65, 60}})).keep);
  EXPECT_FALSE(filter_small_text(candidate(1, 0, 0, {{0, 0, 3999, 1}})).keep);
  EXPECT_TRUE(filter_small_text(candidate(1, 0, 0, {{0, 0, 4000, 1}})).keep);
  EXPECT_TRUE(filter_small_text(candidate(1, 0, 0, {{0, 0, 10, 10}, {0, 0, 100, 40}})).keep);
  EXPECT_FALSE(filter_small_text(candidate(1, 0, 0)).keep);
  EXPECT_EQ(filter_small_text(candidate(1, 0, 0)).max_area, 0.0);
}

TEST(Curate, RecordsWinnerAndVerdict) {
  CandidateGroup g{"g", {candidate(1, 4.2, 3.0, {{0, 0, 80, 50}}), candidate(2, 3.9, 4.0, {{0, 0, 65, 60}})}};
  const FilterRecord r = curate_group(g);
  EXPECT_EQ(*r.winner_id, 2);
  EXPECT_DOUBLE_EQ(*r.winning_score, 11.8);
  EXPECT_FALSE(r.kept);
  EXPECT_EQ(r.reason, "area");
  EXPECT_EQ(curate_group(CandidateGroup{"e", {}}).reason, "empty_group");
}

TEST(Curate, LoadsFlatAndGroupedLines) {
  TempDir dir;
  std::ofstream(dir / "c.jsonl")
      << R"({"group_id":"a","candidate_id":1,"quality":1,"aesthetic":1,"ocr":{"image_width":10,"image_height":10,"words":[]}})"
      << "\n"
      << R"({"group_id":"b","candidates":[]})" << "\n"
      << R"({"group_id":"a","candidate_id":2,"quality":1,"aesthetic":1,"ocr":{"image_width":10,"image_height":10,"words":[]}})"
      << "\n";
  const auto groups = load_candidate_groups(dir / "c.jsonl", NormalizationPolicy::Default);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].group_id, "a");
  EXPECT_EQ(groups[0].candidates.size(), 2u);
  EXPECT_TRUE(groups[1].candidates.empty());

  std::ofstream(dir / "d.jsonl")
      << R"({"group_id":"a","candidate_id":1,"quality":1,"aesthetic":1,"ocr":{"image_width":10,"image_height":10,"words":[]}})"
      << "\n"
      << R"({"group_id":"a","candidate_id":1,"quality":2,"aesthetic":1,"ocr":{"image_width":10,"image_height":10,"words":[]}})"
      << "\n";
  EXPECT_THROW(load_candidate_groups(dir / "d.jsonl", NormalizationPolicy::Default), DataError);
}

TEST(Instructions, MatchGoldenFiles) {
  EXPECT_EQ(render_instruction(InstructionKind::Enhancer,
                               {{"simple_caption", "A coffee shop window with the words \"OPEN DAILY\" painted on it"}}),
            golden("enhancer.txt"));
  EXPECT_EQ(render_instruction(InstructionKind::Recaption,
                               {{"image", "images/0001.png"},
                                {"original_caption",
                                 "A neon sign reading \"NIGHT MARKET\" glows in pink above a crowded street."}}),
            golden("recaption.txt"));
  const std::vector<std::string> texts{"AREA", "PEOPLE"};
  EXPECT_EQ(render_instruction(InstructionKind::Refinement,
                               {{"simple_caption", "a poster that says AREA PEOPLE on a brick wall"},
                                {"ocr_results", format_quoted_list(texts)}}),
            golden("refinement.txt"));
}

TEST(Instructions, SlotsAndContent) {
  const std::string e = render_instruction(InstructionKind::Enhancer, {{"simple_caption", "hello poster"}});
  EXPECT_TRUE(e.starts_with("Simple Caption: hello poster"));
  EXPECT_NE(e.find("limited to 200 words"), std::string::npos);
  EXPECT_THROW(render_instruction(InstructionKind::Recaption, {{"original_caption", "x"}}), DataError);
  const std::string r =
      render_instruction(InstructionKind::Refinement, {{"simple_caption", "x"}, {"ocr_results", "\"A\""}});
  EXPECT_NE(r.find("must not contain any text to be rendered"), std::string::npos);
}

TEST(Bench, Tiers) {
  EXPECT_EQ(classify_difficulty(3), Difficulty::Easy);
  EXPECT_EQ(classify_difficulty(9), Difficulty::Medium);
  EXPECT_EQ(classify_difficulty(14), Difficulty::Hard);
  EXPECT_FALSE(classify_difficulty(1));
  EXPECT_FALSE(classify_difficulty(15));
  for (std::size_t n = 0; n < 20; ++n) {
    const auto t = classify_difficulty(n);
    EXPECT_EQ(t.has_value(), n >= 2 && n <= 14) << n;
  }
}

TEST(Bench, PromptFormat) {
  EXPECT_EQ(make_bench_prompt("1", "A blue logo", {"AREA", "PEOPLE"}).rendered,
            R"(A blue logo, with the text on it: "AREA", "PEOPLE".)");
  const BenchPrompt colored =
      make_bench_prompt("2", "A blue logo", {"AREA", "PEOPLE"}, {{0, AttributeKind::Color, "red"}});
  EXPECT_EQ(colored.rendered, R"(A blue logo, with the text on it: "AREA" in red; "PEOPLE".)");
  const BenchPrompt styled = make_bench_prompt(
      "3", "A card", {"HI", "THERE", "YOU"},
      {{0, AttributeKind::Font, "3D style"}, {2, AttributeKind::Position, "upper left corner"}});
  EXPECT_EQ(styled.rendered,
            R"(A card, with the text on it: "HI", which are 3D letters; "THERE"; "YOU", at the upper left corner of the image.)");
}

TEST(Bench, RejectsBadConditions) {
  EXPECT_THROW(make_bench_prompt("x", "c", {"A", "B"},
                                 {{0, AttributeKind::Font, "3D style"}, {1, AttributeKind::Font, "flat style"}}),
               DataError);
  EXPECT_THROW(make_bench_prompt("x", "c", {"A", "B"},
                                 {{0, AttributeKind::Color, "red"}, {0, AttributeKind::Font, "serif"}}),
               DataError);
  EXPECT_THROW(make_bench_prompt("x", "c", {"A B C D E"}, {{0, AttributeKind::Color, "red"}}), DataError);
  EXPECT_THROW(make_bench_prompt("x", "c", {"A", "B"}, {{0, AttributeKind::Color, "teal"}}), DataError);
  EXPECT_THROW(make_bench_prompt("x", "c", {"A"}), DataError);
  EXPECT_THROW(make_bench_prompt("x", "c", {"A\"", "B"}), DataError);
}

TEST(Bench, ParsesBack) {
  const std::vector<std::string> texts{"LOW TIDE", "café", "3:00 PM"};
  const BenchPrompt p = make_bench_prompt("x", "A beach, at dusk", texts);
  EXPECT_EQ(parse_bench_prompt(p.rendered), texts);
  EXPECT_EQ(p.difficulty, Difficulty::Medium);
}
