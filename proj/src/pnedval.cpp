#include "lexeval/pnedval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lexeval/parallel.hpp"
#include "lexeval/pned.hpp"

namespace lexeval {

void PerturbConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  if (list_len.min < 1 || list_len.min > list_len.max) throw std::invalid_argument("invalid list length range");
  if (str_len.min < 1 || str_len.min > str_len.max) throw std::invalid_argument("invalid string length range");
  if (alphabet.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (!std::isfinite(unmatched_penalty) || unmatched_penalty < 0) {
    throw std::invalid_argument("unmatched penalty must be finite and non-negative");
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream tags keep corpus generation and perturbation draws apart.
constexpr std::uint64_t kCorpusStream = 0;
constexpr std::uint64_t kPerturbStream = 1;

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::span<const std::uint64_t> coordinates) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t c : coordinates) h = splitmix64(h ^ splitmix64(c));
  return h;
}

std::size_t Rng::below(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return static_cast<std::size_t>(x % bound);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string random_string(Rng& rng, const PerturbConfig& cfg) {
  std::string s(rng.between(cfg.str_len.min, cfg.str_len.max), ' ');
  for (auto& ch : s) ch = cfg.alphabet[rng.below(cfg.alphabet.size())];
  return s;
}

std::vector<WordList> generate_corpus(const PerturbConfig& cfg) {
  cfg.validate();
  std::vector<WordList> corpus(cfg.n_samples);
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    const std::uint64_t coords[] = {kCorpusStream, i};
    Rng rng(derive_seed(cfg.rng_seed, coords));
    WordList& sample = corpus[i];
    sample.resize(rng.between(cfg.list_len.min, cfg.list_len.max));
    for (auto& w : sample) w = random_string(rng, cfg);
  }
  return corpus;
}

void apply_perturbation(PerturbOp op,
                        const std::string& word,
                        Rng& rng,
                        const PerturbConfig& cfg,
                        std::vector<std::string>& out) {
  const std::size_t len = word.size();
  switch (op) {
    case PerturbOp::InsertChar: {
      std::string s = word;
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng.below(len + 1)),
               cfg.alphabet[rng.below(cfg.alphabet.size())]);
      out.push_back(std::move(s));
      return;
    }
    case PerturbOp::DeleteChar: {
      if (len <= 1) return;  // a one-character string disappears entirely
      std::string s = word;
      s.erase(rng.below(len), 1);
      out.push_back(std::move(s));
      return;
    }
    case PerturbOp::ReplaceChar: {
      if (len == 0) {
        apply_perturbation(PerturbOp::InsertChar, word, rng, cfg, out);
        return;
      }
      std::string s = word;
      const std::size_t pos = rng.below(len);
      const std::size_t current = cfg.alphabet.find(s[pos]);
      if (current == std::string::npos || cfg.alphabet.size() == 1) {
        s[pos] = cfg.alphabet[rng.below(cfg.alphabet.size())];
      } else {
        // Uniform over the other letters so the string always changes.
        std::size_t k = rng.below(cfg.alphabet.size() - 1);
        if (k >= current) ++k;
        s[pos] = cfg.alphabet[k];
      }
      out.push_back(std::move(s));
      return;
    }
    case PerturbOp::Split: {
      if (len < 2) {
        constexpr PerturbOp kCharOps[] = {PerturbOp::InsertChar, PerturbOp::DeleteChar, PerturbOp::ReplaceChar};
        apply_perturbation(kCharOps[rng.below(3)], word, rng, cfg, out);
        return;
      }
      const std::size_t at = rng.between(1, len - 1);
      out.push_back(word.substr(0, at));
      out.push_back(word.substr(at));
      return;
    }
    case PerturbOp::AddString:
      out.push_back(word);
      out.push_back(random_string(rng, cfg));
      return;
    case PerturbOp::DeleteString:
      return;
  }
}

WordList perturb(std::span<const std::string> sample, double alpha, Rng& rng, const PerturbConfig& cfg) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  WordList out;
  out.reserve(sample.size() + 4);
  for (const auto& word : sample) {
    if (rng.bernoulli(alpha)) {
      apply_perturbation(static_cast<PerturbOp>(rng.below(kPerturbOpCount)), word, rng, cfg, out);
    } else {
      out.push_back(word);
    }
  }
  return out;
}

namespace {

void shuffle(WordList& words, Rng& rng) {
  for (std::size_t i = words.size(); i > 1; --i) std::swap(words[i - 1], words[rng.below(i)]);
}

std::pair<double, double> mean_std(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double sq = 0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / (n - 1.0))};
}

}  // namespace

std::vector<SweepRow> run_sweep(const PerturbConfig& cfg,
                                std::span<const double> alphas,
                                std::size_t repeats,
                                unsigned jobs) {
  cfg.validate();
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    if (!(alphas[a] >= 0.0 && alphas[a] <= 1.0)) throw std::invalid_argument("alpha grid values must lie in [0, 1]");
    if (a > 0 && alphas[a] < alphas[a - 1]) throw std::invalid_argument("alpha grid must be sorted ascending");
  }

  const std::vector<WordList> corpus = generate_corpus(cfg);
  const std::size_t per_alpha = repeats * corpus.size();
  std::vector<double> ordered(alphas.size() * per_alpha);
  std::vector<double> shuffled(ordered.size());

  parallel_for(ordered.size(), jobs, [&](std::size_t cell) {
    const std::size_t a = cell / per_alpha;
    const std::size_t r = (cell % per_alpha) / corpus.size();
    const std::size_t i = cell % corpus.size();
    const std::uint64_t coords[] = {kPerturbStream, a, r, i};
    Rng rng(derive_seed(cfg.rng_seed, coords));

    const WordList& original = corpus[i];
    WordList perturbed = perturb(original, alphas[a], rng, cfg);
    ordered[cell] = pned_total(match_words(original, perturbed), cfg.unmatched_penalty);
    shuffle(perturbed, rng);
    shuffled[cell] = pned_total(match_words(original, perturbed), cfg.unmatched_penalty);
  });

  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const std::span<const double> o(ordered.data() + a * per_alpha, per_alpha);
    const std::span<const double> s(shuffled.data() + a * per_alpha, per_alpha);
    const auto [mo, so] = mean_std(o);
    const auto [ms, ss] = mean_std(s);
    rows.push_back({alphas[a], mo, so, ms, ss});
  }
  return rows;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  return grid;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = "alpha,mean_pned_ordered,std_ordered,mean_pned_shuffled,std_shuffled\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f,%.6f,%.6f\n", r.alpha, r.mean_ordered, r.std_ordered,
                  r.mean_shuffled, r.std_shuffled);
    out += line;
  }
  return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace lexeval
