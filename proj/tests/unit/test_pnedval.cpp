#include <regex>
#include <set>

#include <gtest/gtest.h>

#include "lexeval/pned.hpp"
#include "lexeval/pnedval.hpp"

using namespace lexeval;

TEST(Corpus, DeterministicAndWithinRanges) {
  PerturbConfig cfg;
  cfg.rng_seed = 42;
  const auto a = generate_corpus(cfg);
  EXPECT_EQ(a, generate_corpus(cfg));
  ASSERT_EQ(a.size(), 100u);
  const std::regex word("[a-z]{3,8}");
  for (const auto& sample : a) {
    EXPECT_GE(sample.size(), 1u);
    EXPECT_LE(sample.size(), 20u);
    for (const auto& s : sample) EXPECT_TRUE(std::regex_match(s, word)) << s;
  }
  cfg.rng_seed = 43;
  EXPECT_NE(a, generate_corpus(cfg));
}

TEST(Corpus, DegenerateLengthRange) {
  PerturbConfig cfg;
  cfg.list_len = {3, 3};
  for (const auto& sample : generate_corpus(cfg)) EXPECT_EQ(sample.size(), 3u);
}

TEST(Perturb, ZeroAlphaIsIdentity) {
  PerturbConfig cfg;
  Rng rng(1);
  const WordList in{"abc", "defgh", "xyz"};
  EXPECT_EQ(perturb(in, 0.0, rng, cfg), in);
}

TEST(Perturb, FullAlphaAlwaysChangesSingleString) {
  PerturbConfig cfg;
  const WordList in{"abc"};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    EXPECT_NE(perturb(in, 1.0, rng, cfg), in) << seed;
  }
}

TEST(Perturb, EachOperation) {
  PerturbConfig cfg;
  Rng rng(9);
  std::vector<std::string> out;
  apply_perturbation(PerturbOp::InsertChar, "abcd", rng, cfg, out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].size(), 5u);

  out.clear();
  apply_perturbation(PerturbOp::DeleteChar, "abcd", rng, cfg, out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].size(), 3u);

  out.clear();
  apply_perturbation(PerturbOp::ReplaceChar, "abcd", rng, cfg, out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].size(), 4u);
  EXPECT_NE(out[0], "abcd");

  out.clear();
  apply_perturbation(PerturbOp::Split, "abcd", rng, cfg, out);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0] + out[1], "abcd");
  EXPECT_FALSE(out[0].empty());
  EXPECT_FALSE(out[1].empty());

  out.clear();
  apply_perturbation(PerturbOp::AddString, "abcd", rng, cfg, out);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], "abcd");

  out.clear();
  apply_perturbation(PerturbOp::DeleteString, "abcd", rng, cfg, out);
  EXPECT_TRUE(out.empty());
}

TEST(Perturb, SplitPointsCoverInterior) {
  PerturbConfig cfg;
  Rng rng(4);
  std::set<std::string> firsts;
  for (int k = 0; k < 200; ++k) {
    std::vector<std::string> out;
    apply_perturbation(PerturbOp::Split, "abcd", rng, cfg, out);
    firsts.insert(out[0]);
  }
  EXPECT_EQ(firsts, (std::set<std::string>{"a", "ab", "abc"}));
}

TEST(Rng, UniformHelpersStayInRange) {
  Rng rng(77);
  std::vector<int> counts(6);
  for (int k = 0; k < 6000; ++k) {
    const auto v = rng.below(6);
    ASSERT_LT(v, 6u);
    ++counts[v];
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int c : counts) EXPECT_GT(c, 800);
}

TEST(Sweep, SmallGrid) {
  PerturbConfig cfg;
  cfg.n_samples = 40;
  cfg.rng_seed = 5;
  const std::vector<double> alphas{0.0, 0.5, 1.0};
  const auto rows = run_sweep(cfg, alphas, 2, 1);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].mean_ordered, 0.0);
  EXPECT_EQ(rows[0].std_ordered, 0.0);
  for (const auto& r : rows) {
    EXPECT_EQ(r.mean_ordered, r.mean_shuffled);
    EXPECT_EQ(r.std_ordered, r.std_shuffled);
  }
  EXPECT_LE(rows[0].mean_ordered, rows[1].mean_ordered);
  EXPECT_LE(rows[1].mean_ordered, rows[2].mean_ordered);
  EXPECT_EQ(sweep_to_csv(rows), sweep_to_csv(run_sweep(cfg, alphas, 2, 4)));
}

TEST(Sweep, RejectsBadGrids) {
  PerturbConfig cfg;
  cfg.n_samples = 2;
  EXPECT_THROW(run_sweep(cfg, std::vector<double>{0.5, 0.1}, 1), std::invalid_argument);
  EXPECT_THROW(run_sweep(cfg, std::vector<double>{0.0, 1.5}, 1), std::invalid_argument);
  EXPECT_THROW(run_sweep(cfg, std::vector<double>{0.0}, 0), std::invalid_argument);
}

TEST(Sweep, CsvLayout) {
  const std::vector<SweepRow> rows{{0.0, 0.0, 0.0, 0.0, 0.0}, {0.5, 1.25, 0.5, 1.25, 0.5}};
  EXPECT_EQ(sweep_to_csv(rows),
            "alpha,mean_pned_ordered,std_ordered,mean_pned_shuffled,std_shuffled\n"
            "0.000000,0.000000,0.000000,0.000000,0.000000\n"
            "0.500000,1.250000,0.500000,1.250000,0.500000\n");
}

TEST(Spearman, Values) {
  const std::vector<double> x{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(spearman(x, std::vector<double>{10, 20, 30, 40}), 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, std::vector<double>{4, 3, 2, 1}), -1.0);
  // Ties get average ranks: y ranks are 1.5, 1.5, 3, 4.
  EXPECT_NEAR(spearman(x, std::vector<double>{5, 5, 6, 7}), 0.9486832980505138, 1e-12);
}
