#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lexeval {

using WordList = std::vector<std::string>;

struct IntRange {
  std::size_t min = 0;
  std::size_t max = 0;  // inclusive
};

struct PerturbConfig {
  double alpha = 0.0;
  std::size_t n_samples = 100;
  IntRange list_len{1, 20};
  IntRange str_len{3, 8};
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::uint64_t rng_seed = 0;
  double unmatched_penalty = 1.0;

  void validate() const;
};

// Mixes a seed with stream coordinates into an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::span<const std::uint64_t> coordinates);

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined std distributions so streams match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::size_t below(std::size_t n);
  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  // Uniform in [0, 1) with 53 bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class PerturbOp {
  InsertChar,
  DeleteChar,
  ReplaceChar,
  Split,
  AddString,
  DeleteString,
};

inline constexpr std::size_t kPerturbOpCount = 6;

std::string random_string(Rng& rng, const PerturbConfig& cfg);

// Applies `op` to `word` and appends the replacement strings (zero, one
// or two of them) to `out`. Split of a string shorter than 2 falls back to a
// uniformly chosen character operation.
void apply_perturbation(PerturbOp op,
                        const std::string& word,
                        Rng& rng,
                        const PerturbConfig& cfg,
                        std::vector<std::string>& out);

// Each string independently: with probability alpha, one of the six
// operations chosen uniformly.
WordList perturb(std::span<const std::string> sample, double alpha, Rng& rng, const PerturbConfig& cfg);

// Deterministic given cfg.rng_seed.
std::vector<WordList> generate_corpus(const PerturbConfig& cfg);

struct SweepRow {
  double alpha = 0;
  double mean_ordered = 0;
  double std_ordered = 0;
  double mean_shuffled = 0;
  double std_shuffled = 0;
};

// For each alpha: PNED between every original sample and its perturbed copy,
// once in perturbed order and once shuffled, pooled over `repeats`.
// Deterministic for a given cfg.rng_seed regardless of `jobs`.
std::vector<SweepRow> run_sweep(const PerturbConfig& cfg,
                                std::span<const double> alphas,
                                std::size_t repeats,
                                unsigned jobs = 1);

std::vector<double> default_alpha_grid();

std::string sweep_to_csv(std::span<const SweepRow> rows);

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace lexeval
