#include "lexeval/curation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lexeval/errors.hpp"
#include "lexeval/text.hpp"

namespace lexeval {

std::string_view to_string(SeedReason reason) {
  switch (reason) {
    case SeedReason::Kept: return "kept";
    case SeedReason::Empty: return "empty";
    case SeedReason::Meaningless: return "meaningless";
    case SeedReason::Verbose: return "verbose";
    case SeedReason::Long: return "long";
  }
  return "kept";
}

SeedVerdict filter_seed_caption(std::string_view caption) {
  SeedVerdict v;
  const auto words = split_whitespace(caption);
  v.word_count = words.size();
  if (words.empty()) {
    v.reason = SeedReason::Empty;
    return v;
  }

  // Non-ASCII letters count as content; only symbol soup is meaningless.
  const std::u32string cps = decode_utf8(caption);
  const bool has_content = std::any_of(cps.begin(), cps.end(), [](char32_t cp) {
    return is_ascii_alnum(cp) || (cp >= 0x80 && !is_space(cp) && !is_punctuation(cp));
  });
  if (!has_content) {
    v.reason = SeedReason::Meaningless;
  } else if (v.word_count > kVerboseSeedWords) {
    v.reason = SeedReason::Verbose;
  } else if (v.word_count >= kMaxSeedWords) {
    v.reason = SeedReason::Long;
  } else {
    v.keep = true;
    v.reason = SeedReason::Kept;
  }
  return v;
}

Selection select_best_of_n(std::span<const Candidate> group, const ScoreWeights& weights) {
  if (group.empty()) throw DataError("cannot select from an empty candidate group");
  Selection best;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const double s = weights.score(group[i]);
    if (!std::isfinite(s)) {
      throw DataError("candidate " + std::to_string(group[i].candidate_id) + " of group '" +
                      group[i].group_id + "' has a non-finite score");
    }
    if (i == 0 || s > best.score ||
        (s == best.score && group[i].candidate_id < group[best.index].candidate_id)) {
      best = {i, s};
    }
  }
  return best;
}

AreaVerdict filter_small_text(const Candidate& candidate, double min_area_px) {
  AreaVerdict v;
  for (const auto& w : candidate.ocr.words) v.max_area = std::max(v.max_area, w.bbox.area());
  v.keep = !candidate.ocr.words.empty() && v.max_area >= min_area_px;
  return v;
}

FilterRecord curate_group(const CandidateGroup& group, const ScoreWeights& weights, double min_area_px) {
  FilterRecord r;
  r.group_id = group.group_id;
  if (group.candidates.empty()) {
    r.reason = "empty_group";
    return r;
  }
  const Selection sel = select_best_of_n(group.candidates, weights);
  const Candidate& winner = group.candidates[sel.index];
  const AreaVerdict area = filter_small_text(winner, min_area_px);
  r.winner_id = winner.candidate_id;
  r.winning_score = sel.score;
  r.max_text_area = area.max_area;
  r.kept = area.keep;
  r.reason = area.keep ? "kept" : "area";
  return r;
}

Candidate parse_candidate(const Json& record, NormalizationPolicy policy, const std::string& context) {
  Candidate c;
  c.group_id = require_string(record, "group_id", context);
  c.candidate_id = require_integer(record, "candidate_id", context);
  c.quality = require_number(record, "quality", context);
  c.aesthetic = require_number(record, "aesthetic", context);
  c.ocr = parse_ocr(require(record, "ocr", context), policy, context);
  if (const auto it = record.find("caption"); it != record.end() && it->is_string()) c.caption = it->get<std::string>();
  if (const auto it = record.find("image"); it != record.end() && it->is_string()) c.image = it->get<std::string>();
  return c;
}

std::vector<CandidateGroup> load_candidate_groups(const std::filesystem::path& path, NormalizationPolicy policy) {
  std::vector<CandidateGroup> groups;
  std::map<std::string, std::size_t> index;
  auto group_for = [&](const std::string& id) -> CandidateGroup& {
    auto [it, inserted] = index.emplace(id, groups.size());
    if (inserted) groups.push_back({id, {}});
    return groups[it->second];
  };

  for_each_jsonl(path, [&](std::size_t line, const Json& record) {
    const std::string ctx = path.filename().string() + " line " + std::to_string(line);
    if (const auto it = record.find("candidates"); it != record.end()) {
      const std::string gid = require_string(record, "group_id", ctx);
      if (!it->is_array()) throw DataError(ctx + ": 'candidates' must be an array");
      CandidateGroup& g = group_for(gid);
      for (const auto& entry : *it) {
        if (!entry.is_object()) throw DataError(ctx + ": candidates must be objects");
        Json with_group = entry;
        if (!with_group.contains("group_id")) with_group["group_id"] = gid;
        Candidate c = parse_candidate(with_group, policy, ctx);
        if (c.group_id != gid) throw DataError(ctx + ": candidate group_id does not match its group");
        g.candidates.push_back(std::move(c));
      }
    } else {
      Candidate c = parse_candidate(record, policy, ctx);
      group_for(c.group_id).candidates.push_back(std::move(c));
    }
  });

  for (const auto& g : groups) {
    std::set<std::int64_t> seen;
    for (const auto& c : g.candidates) {
      if (!seen.insert(c.candidate_id).second) {
        throw DataError("group '" + g.group_id + "' has duplicate candidate_id " + std::to_string(c.candidate_id));
      }
    }
  }
  return groups;
}

Json filter_record_to_json(const FilterRecord& r) {
  Json out = {{"group_id", r.group_id}};
  out["winner_id"] = r.winner_id ? Json(*r.winner_id) : Json(nullptr);
  out["winning_score"] = r.winning_score ? Json(*r.winning_score) : Json(nullptr);
  out["max_text_area"] = r.max_text_area ? Json(*r.max_text_area) : Json(nullptr);
  out["kept"] = r.kept;
  out["reason"] = r.reason;
  return out;
}

}  // namespace lexeval
