#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "lexeval/attributes.hpp"
#include "lexeval/curation.hpp"
#include "lexeval/errors.hpp"
#include "lexeval/io.hpp"
#include "lexeval/ocr_metrics.hpp"
#include "lexeval/parallel.hpp"
#include "lexeval/pnedval.hpp"

namespace lexeval::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string normalization = "default";
  double ned_threshold = 0.3;
  double crop_margin = kDefaultCropMargin;
  double min_area = kDefaultMinTextArea;
  double quality_weight = kDefaultQualityWeight;
  double aesthetic_weight = kDefaultAestheticWeight;
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();

  NormalizationPolicy policy() const { return parse_normalization_policy(normalization); }
  MatchingPolicy matching() const { return {ned_threshold}; }
  ScoreWeights weights() const { return {quality_weight, aesthetic_weight}; }
};

struct EvalArgs {
  fs::path samples;
  fs::path out;
  fs::path judge_requests;
  fs::path judge_answers;
};

struct CurateArgs {
  fs::path candidates;
  fs::path out;
  fs::path llm_requests;
};

struct BenchArgs {
  fs::path input;
  fs::path out;
  fs::path skipped;
  fs::path llm_requests;
  fs::path llm_responses;
};

struct ValidateArgs {
  fs::path out;
  std::vector<double> alphas = default_alpha_grid();
  std::size_t repeats = 5;
  std::size_t samples = 100;
};

struct JudgeStubArgs {
  fs::path requests;
  fs::path fixture;
  fs::path out;
  std::string fallback = "first";
};

struct SeedsArgs {
  fs::path input;
  fs::path out;
  fs::path llm_requests;
};

int cmd_eval(const RunConfig& cfg, const EvalArgs& args, std::ostream& out) {
  const MatchingPolicy policy = cfg.matching();
  const std::vector<Sample> samples = load_samples(args.samples, cfg.policy());

  std::vector<SampleReport> reports(samples.size());
  std::vector<AttributePlan> plans(samples.size());
  parallel_for(samples.size(), cfg.jobs, [&](std::size_t i) {
    const Sample& s = samples[i];
    const WordMatching matching = match_words(s.gt.words, s.ocr.texts());
    reports[i] = evaluate_sample(s, policy);
    plans[i] = plan_attribute_checks(s, matching, policy, cfg.crop_margin);
  });

  const bool has_conditions =
      std::any_of(samples.begin(), samples.end(), [](const Sample& s) { return !s.gt.conditions.empty(); });
  std::vector<JudgeQuery> queries;
  for (const auto& p : plans) queries.insert(queries.end(), p.queries.begin(), p.queries.end());

  std::optional<AnswerBook> answers;
  if (!args.judge_answers.empty()) {
    answers = read_judge_answers(args.judge_answers);
    std::set<std::string, std::less<>> emitted;
    for (const auto& q : queries) emitted.insert(q.query_id);
    for (const auto& id : answers->query_ids()) {
      if (!emitted.contains(id)) throw DataError("judge answer for unknown query '" + id + "'");
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    reports[i].attributes =
        score_attributes(plans[i].outcomes, plans[i].queries, answers ? &*answers : nullptr);
  }

  const AggregateReport report = aggregate(std::move(reports));
  write_report(args.out, report);
  if (has_conditions) {
    const fs::path requests_path = args.judge_requests.empty()
                                       ? args.out.parent_path() / "judge_requests.jsonl"
                                       : args.judge_requests;
    write_judge_requests(requests_path, queries);
    out << "wrote " << queries.size() << " judge queries to " << requests_path.string() << "\n";
  }
  out << "evaluated " << report.count << " samples";
  if (report.metrics) {
    out << ": mean PNED " << report.metrics->pned.mean << ", mean recall " << report.metrics->recall.mean;
  }
  out << "\n";
  return kExitOk;
}

int cmd_curate(const RunConfig& cfg, const CurateArgs& args, std::ostream& out, std::ostream& err) {
  const auto groups = load_candidate_groups(args.candidates, cfg.policy());
  const ScoreWeights weights = cfg.weights();

  std::vector<Json> records;
  std::vector<LlmRequest> requests;
  std::size_t kept = 0;
  std::size_t failed = 0;
  for (const auto& g : groups) {
    const FilterRecord r = curate_group(g, weights, cfg.min_area);
    records.push_back(filter_record_to_json(r));
    if (r.reason == "empty_group") {
      ++failed;
      err << "group '" << g.group_id << "' has no candidates\n";
      continue;
    }
    if (!r.kept) continue;
    ++kept;
    const auto winner = std::find_if(g.candidates.begin(), g.candidates.end(),
                                     [&](const Candidate& c) { return c.candidate_id == *r.winner_id; });
    if (winner->caption && winner->image) {
      requests.push_back({g.group_id, InstructionKind::Recaption,
                          render_instruction(InstructionKind::Recaption,
                                             {{"image", *winner->image}, {"original_caption", *winner->caption}}),
                          winner->image});
    }
  }
  write_jsonl_atomic(args.out, records);
  if (!args.llm_requests.empty()) write_llm_requests(args.llm_requests, requests);
  out << "curated " << groups.size() << " groups: " << kept << " kept\n";
  return failed == 0 ? kExitOk : kExitData;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> refined;
  if (!args.llm_responses.empty()) refined = read_llm_responses(args.llm_responses);

  std::vector<Json> prompts;
  std::vector<Json> skipped;
  std::vector<LlmRequest> requests;
  TierCounts tiers;
  std::size_t errors = 0;

  for_each_jsonl(args.input, [&](std::size_t line, const Json& record) {
    const std::string ctx = args.input.filename().string() + " line " + std::to_string(line);
    BenchSource src = parse_bench_source(record, ctx);
    const std::size_t words = count_words(src.texts);
    if (!classify_difficulty(words)) {
      skipped.push_back({{"id", src.id}, {"reason", "word_count"}, {"word_count", words}});
      ++tiers.out_of_range;
      return;
    }
    if (const auto it = refined.find(src.id); it != refined.end()) src.image_caption = it->second;
    try {
      BenchPrompt p = make_bench_prompt(src.id, src.image_caption, src.texts, src.conditions);
      switch (p.difficulty) {
        case Difficulty::Easy: ++tiers.easy; break;
        case Difficulty::Medium: ++tiers.medium; break;
        case Difficulty::Hard: ++tiers.hard; break;
      }
      requests.push_back({p.id, InstructionKind::Refinement,
                          render_instruction(InstructionKind::Refinement,
                                             {{"simple_caption", p.image_caption},
                                              {"ocr_results", format_quoted_list(p.text_captions)}}),
                          std::nullopt});
      prompts.push_back(bench_prompt_to_json(p));
    } catch (const DataError& e) {
      ++errors;
      err << ctx << ": " << e.what() << "\n";
      skipped.push_back({{"id", src.id}, {"reason", "invalid"}, {"error", e.what()}});
    }
  });

  write_jsonl_atomic(args.out, prompts);
  if (!args.skipped.empty()) write_jsonl_atomic(args.skipped, skipped);
  if (!args.llm_requests.empty()) write_llm_requests(args.llm_requests, requests);
  out << "bench: " << tiers.easy << " easy, " << tiers.medium << " medium, " << tiers.hard << " hard, "
      << tiers.out_of_range << " out of range, " << errors << " invalid\n";
  return errors == 0 ? kExitOk : kExitData;
}

int cmd_validate_pned(const RunConfig& cfg, const ValidateArgs& args, std::ostream& out) {
  PerturbConfig pc;
  pc.n_samples = args.samples;
  pc.rng_seed = cfg.seed;
  std::vector<SweepRow> rows;
  try {
    rows = run_sweep(pc, args.alphas, args.repeats, cfg.jobs);
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("invalid sweep configuration: ") + e.what());
  }
  write_file_atomic(args.out, sweep_to_csv(rows));

  std::vector<double> alphas, means;
  for (const auto& r : rows) {
    alphas.push_back(r.alpha);
    means.push_back(r.mean_ordered);
  }
  out << "wrote " << rows.size() << " rows to " << args.out.string();
  if (rows.size() >= 2) out << "; spearman(alpha, mean PNED) = " << spearman(alphas, means);
  out << "\n";
  return kExitOk;
}

int cmd_judge_stub(const JudgeStubArgs& args, std::ostream& out) {
  const auto requests = read_judge_requests(args.requests);
  AnswerBook fixture;
  if (!args.fixture.empty()) fixture = read_judge_answers(args.fixture);

  std::vector<Json> answers;
  answers.reserve(requests.size());
  for (const auto& q : requests) {
    std::string answer;
    if (const std::string* a = fixture.find(q.query_id)) {
      answer = *a;
    } else if (args.fallback == "first" && !q.expected_answers.empty()) {
      answer = q.expected_answers.front();
    } else if (args.fallback == "second" && q.expected_answers.size() > 1) {
      answer = q.expected_answers[1];
    } else {
      throw DataError("no fixture answer for query '" + q.query_id + "'");
    }
    answers.push_back({{"query_id", q.query_id}, {"answer", answer}});
  }
  write_jsonl_atomic(args.out, answers);
  out << "answered " << answers.size() << " queries\n";
  return kExitOk;
}

int cmd_seeds(const SeedsArgs& args, std::ostream& out) {
  std::vector<Json> records;
  std::vector<LlmRequest> requests;
  std::size_t kept = 0;
  for_each_jsonl(args.input, [&](std::size_t line, const Json& record) {
    const std::string ctx = args.input.filename().string() + " line " + std::to_string(line);
    const std::string id = require_string(record, "id", ctx);
    const std::string caption = require_string(record, "caption", ctx);
    const SeedVerdict v = filter_seed_caption(caption);
    records.push_back({{"id", id}, {"keep", v.keep}, {"reason", to_string(v.reason)}, {"word_count", v.word_count}});
    if (v.keep) {
      ++kept;
      requests.push_back({id, InstructionKind::Enhancer,
                          render_instruction(InstructionKind::Enhancer, {{"simple_caption", caption}}),
                          std::nullopt});
    }
  });
  write_jsonl_atomic(args.out, records);
  if (!args.llm_requests.empty()) write_llm_requests(args.llm_requests, requests);
  out << "seeds: " << kept << " of " << records.size() << " captions kept\n";
  return kExitOk;
}

void check_finite(double value, const char* flag) {
  if (!std::isfinite(value)) throw IoError(std::string(flag) + " must be a finite number");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation and curation toolkit for rendered text in generated images", "lexeval"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--normalization", cfg.normalization, "Token normalization policy")
      ->check(CLI::IsMember({"default", "exact"}))
      ->capture_default_str();
  app.add_option("--ned-threshold", cfg.ned_threshold, "NED at or below which a matched pair counts as a hit")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--crop-margin", cfg.crop_margin, "Per-side crop growth as a fraction of the box side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--min-area", cfg.min_area, "Minimum area in pixels of the largest text box")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--quality-weight", cfg.quality_weight, "Weight of the quality score")->capture_default_str();
  app.add_option("--aesthetic-weight", cfg.aesthetic_weight, "Weight of the aesthetic score")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for synthetic data")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score OCR results against ground-truth words");
  eval_cmd->add_option("--samples", eval.samples, "samples.jsonl")->required();
  eval_cmd->add_option("--out", eval.out, "report.json")->required();
  eval_cmd->add_option("--judge-requests", eval.judge_requests, "Where to write judge_requests.jsonl");
  eval_cmd->add_option("--judge-answers", eval.judge_answers, "judge_answers.jsonl to fold into the report");

  CurateArgs curate;
  auto* curate_cmd = app.add_subcommand("curate", "Best-of-N selection and small-text filtering");
  curate_cmd->add_option("--candidates", curate.candidates, "candidates.jsonl")->required();
  curate_cmd->add_option("--out", curate.out, "filter_report.jsonl")->required();
  curate_cmd->add_option("--llm-requests", curate.llm_requests, "Recaption requests for kept winners");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Render benchmark prompts with difficulty tiers");
  bench_cmd->add_option("--input", bench.input, "Raw caption/text records")->required();
  bench_cmd->add_option("--out", bench.out, "bench.jsonl")->required();
  bench_cmd->add_option("--skipped", bench.skipped, "Skipped and invalid records");
  bench_cmd->add_option("--llm-requests", bench.llm_requests, "Caption refinement requests");
  bench_cmd->add_option("--llm-responses", bench.llm_responses, "Refined captions keyed by record id");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate-pned", "Controlled perturbation sweep for PNED");
  validate_cmd->add_option("--out", validate.out, "sweep.csv")->required();
  validate_cmd->add_option("--alphas", validate.alphas, "Perturbation probabilities, ascending")->delimiter(',');
  validate_cmd->add_option("--repeats", validate.repeats, "Repeats per alpha")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}))
      ->capture_default_str();
  validate_cmd->add_option("--samples", validate.samples, "Synthetic samples")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
      ->capture_default_str();

  JudgeStubArgs stub;
  auto* stub_cmd = app.add_subcommand("judge-stub", "Answer judge requests from a fixture file");
  stub_cmd->add_option("--requests", stub.requests, "judge_requests.jsonl")->required();
  stub_cmd->add_option("--fixture", stub.fixture, "judge_answers.jsonl with canned answers");
  stub_cmd->add_option("--out", stub.out, "judge_answers.jsonl")->required();
  stub_cmd->add_option("--fallback", stub.fallback, "Answer for queries missing from the fixture")
      ->check(CLI::IsMember({"first", "second", "none"}))
      ->capture_default_str();

  SeedsArgs seeds;
  auto* seeds_cmd = app.add_subcommand("seeds", "Filter seed captions and emit enhancer requests");
  seeds_cmd->add_option("--input", seeds.input, "Records of {id, caption}")->required();
  seeds_cmd->add_option("--out", seeds.out, "Per-caption keep/drop decisions")->required();
  seeds_cmd->add_option("--llm-requests", seeds.llm_requests, "Enhancer requests for kept captions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    check_finite(cfg.quality_weight, "--quality-weight");
    check_finite(cfg.aesthetic_weight, "--aesthetic-weight");
    if (*eval_cmd) return cmd_eval(cfg, eval, out);
    if (*curate_cmd) return cmd_curate(cfg, curate, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*validate_cmd) return cmd_validate_pned(cfg, validate, out);
    if (*stub_cmd) return cmd_judge_stub(stub, out);
    if (*seeds_cmd) return cmd_seeds(seeds, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace lexeval::cli
