#include "lexeval/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "lexeval/errors.hpp"

namespace lexeval {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buf.str();
}

void for_each_jsonl(const fs::path& path, const std::function<void(std::size_t, const Json&)>& visit) {
  const std::string contents = read_file(path);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string::npos) end = contents.size();
    std::string_view line(contents.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw DataError(path.filename().string() + " line " + std::to_string(line_no) +
                      ": malformed JSON: " + e.what());
    }
    if (!record.is_object()) {
      throw DataError(path.filename().string() + " line " + std::to_string(line_no) +
                      ": expected a JSON object");
    }
    visit(line_no, record);
  }
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);

  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("error writing '" + path.string() + "'");
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace '" + path.string() + "'");
  }
}

void write_jsonl_atomic(const fs::path& path, const std::vector<Json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  write_file_atomic(path, out);
}

const Json& require(const Json& record, std::string_view key, const std::string& context) {
  const auto it = record.find(key);
  if (it == record.end()) throw DataError(context + ": missing field '" + std::string(key) + "'");
  return *it;
}

std::string require_string(const Json& record, std::string_view key, const std::string& context) {
  const Json& v = require(record, key, context);
  if (!v.is_string()) throw DataError(context + ": field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

double require_number(const Json& record, std::string_view key, const std::string& context) {
  const Json& v = require(record, key, context);
  if (!v.is_number()) throw DataError(context + ": field '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

long long require_integer(const Json& record, std::string_view key, const std::string& context) {
  const Json& v = require(record, key, context);
  if (!v.is_number_integer()) {
    throw DataError(context + ": field '" + std::string(key) + "' must be an integer");
  }
  return v.get<long long>();
}

namespace {

BBox parse_bbox(const Json& v, const std::string& context) {
  if (!v.is_array() || v.size() != 4) throw DataError(context + ": bbox must be [x0, y0, x1, y1]");
  for (const auto& x : v) {
    if (!x.is_number()) throw DataError(context + ": bbox entries must be numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
}

Json bbox_to_json(const BBox& b) { return Json::array({b.x0, b.y0, b.x1, b.y1}); }

}  // namespace

OcrResult parse_ocr(const Json& record, NormalizationPolicy policy, const std::string& context) {
  if (!record.is_object()) throw DataError(context + ": 'ocr' must be an object");
  OcrResult ocr;
  const long long width = require_integer(record, "image_width", context);
  const long long height = require_integer(record, "image_height", context);
  if (width <= 0 || height <= 0) throw DataError(context + ": image dimensions must be positive");
  ocr.image = {static_cast<int>(width), static_cast<int>(height)};

  const Json& words = require(record, "words", context);
  if (!words.is_array()) throw DataError(context + ": 'words' must be an array");
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Json& w = words[i];
    const std::string wctx = context + ": ocr word " + std::to_string(i);
    if (!w.is_object()) throw DataError(wctx + " must be an object");
    const std::string text = require_string(w, "text", wctx);
    const BBox raw = parse_bbox(require(w, "bbox", wctx), wctx);
    if (!raw.is_proper()) throw DataError(wctx + ": bbox requires x0 < x1 and y0 < y1");
    const BBox box = clamp_to_image(raw, ocr.image);
    if (!box.is_proper()) throw DataError(wctx + ": bbox lies outside the image");
    const double conf = require_number(w, "confidence", wctx);
    if (!(conf >= 0.0 && conf <= 1.0)) throw DataError(wctx + ": confidence outside [0, 1]");

    // A detected line becomes one element per whitespace-separated token.
    for (auto& token : tokenize(text, policy)) {
      ocr.words.push_back({std::move(token), box, conf});
    }
  }
  return ocr;
}

Json ocr_to_json(const OcrResult& ocr) {
  Json words = Json::array();
  for (const auto& w : ocr.words) {
    words.push_back({{"text", w.text}, {"bbox", bbox_to_json(w.bbox)}, {"confidence", w.confidence}});
  }
  return {{"image_width", ocr.image.width}, {"image_height", ocr.image.height}, {"words", words}};
}

Sample parse_sample(const Json& record, NormalizationPolicy policy, const std::string& context) {
  Sample sample;
  sample.id = require_string(record, "id", context);
  const std::string ctx = context + " (sample '" + sample.id + "')";

  const Json& gt_words = require(record, "gt_words", ctx);
  if (!gt_words.is_array()) throw DataError(ctx + ": 'gt_words' must be an array");
  // first_token[k] is the token index of gt_words[k], or npos if it had none.
  std::vector<std::size_t> first_token;
  for (const auto& entry : gt_words) {
    if (!entry.is_string()) throw DataError(ctx + ": 'gt_words' entries must be strings");
    auto tokens = tokenize(entry.get<std::string>(), policy);
    first_token.push_back(tokens.empty() ? std::string::npos : sample.gt.words.size());
    for (auto& t : tokens) sample.gt.words.push_back(std::move(t));
  }

  if (const auto it = record.find("conditions"); it != record.end() && !it->is_null()) {
    if (!it->is_array()) throw DataError(ctx + ": 'conditions' must be an array");
    for (const auto& c : *it) {
      if (!c.is_object()) throw DataError(ctx + ": conditions must be objects");
      const long long index = require_integer(c, "word_index", ctx);
      if (index < 0 || static_cast<std::size_t>(index) >= first_token.size()) {
        throw DataError(ctx + ": condition word_index " + std::to_string(index) + " out of range for " +
                        std::to_string(first_token.size()) + " words");
      }
      const std::size_t token = first_token[static_cast<std::size_t>(index)];
      if (token == std::string::npos) {
        throw DataError(ctx + ": condition word_index " + std::to_string(index) +
                        " refers to a word that is empty after normalization");
      }
      const std::string kind_name = require_string(c, "kind", ctx);
      const auto kind = parse_attribute_kind(kind_name);
      if (!kind) throw DataError(ctx + ": unknown condition kind '" + kind_name + "'");
      sample.gt.conditions.push_back({token, *kind, require_string(c, "value", ctx)});
    }
  }

  sample.ocr = parse_ocr(require(record, "ocr", ctx), policy, ctx);
  validate(sample.gt, ctx);
  validate(sample.ocr, ctx);
  return sample;
}

Json sample_to_json(const Sample& sample) {
  Json record = {{"id", sample.id}, {"gt_words", sample.gt.words}};
  if (!sample.gt.conditions.empty()) {
    Json conditions = Json::array();
    for (const auto& c : sample.gt.conditions) {
      conditions.push_back({{"word_index", c.word_index}, {"kind", to_string(c.kind)}, {"value", c.value}});
    }
    record["conditions"] = std::move(conditions);
  }
  record["ocr"] = ocr_to_json(sample.ocr);
  return record;
}

std::vector<Sample> load_samples(const fs::path& path, NormalizationPolicy policy) {
  std::vector<Sample> samples;
  for_each_jsonl(path, [&](std::size_t line, const Json& record) {
    samples.push_back(parse_sample(record, policy, path.filename().string() + " line " + std::to_string(line)));
  });
  return samples;
}

void write_samples(const fs::path& path, const std::vector<Sample>& samples) {
  std::vector<Json> records;
  records.reserve(samples.size());
  for (const auto& s : samples) records.push_back(sample_to_json(s));
  write_jsonl_atomic(path, records);
}

namespace {

Json summary_to_json(const MetricSummary& s) { return {{"mean", s.mean}, {"std", s.std}}; }

Json sample_attribute_scores(const AttributeTallies& t) {
  Json out = Json::object();
  for (auto kind : {AttributeKind::Color, AttributeKind::Font, AttributeKind::Position}) {
    if (auto score = t[kind].score()) out[std::string(to_string(kind))] = *score;
  }
  return out;
}

}  // namespace

Json sample_report_to_json(const SampleReport& r) {
  return {{"id", r.sample_id},
          {"gt_word_count", r.gt_word_count},
          {"ocr_word_count", r.ocr_word_count},
          {"pned", r.pned},
          {"recall", r.recall},
          {"precision", r.precision},
          {"ocr_f1", r.ocr_f1},
          {"word_accuracy", r.word_accuracy},
          {"sentence_exact", r.sentence_exact},
          {"attribute_scores", sample_attribute_scores(r.attributes)}};
}

Json aggregate_report_to_json(const AggregateReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) samples.push_back(sample_report_to_json(s));

  Json agg = {{"count", report.count}};
  if (report.metrics) {
    const auto& m = *report.metrics;
    agg["metrics"] = {{"pned", summary_to_json(m.pned)},
                      {"recall", summary_to_json(m.recall)},
                      {"precision", summary_to_json(m.precision)},
                      {"ocr_f1", summary_to_json(m.ocr_f1)},
                      {"word_accuracy", summary_to_json(m.word_accuracy)},
                      {"sentence_accuracy", summary_to_json(m.sentence_accuracy)}};
  }
  agg["tiers"] = {{"easy", report.tiers.easy},
                  {"medium", report.tiers.medium},
                  {"hard", report.tiers.hard},
                  {"out_of_range", report.tiers.out_of_range}};
  Json attrs = Json::object();
  for (auto kind : {AttributeKind::Color, AttributeKind::Font, AttributeKind::Position}) {
    const auto& t = report.attributes[kind];
    if (auto score = t.score()) {
      attrs[std::string(to_string(kind))] = {{"score", *score}, {"satisfied", t.satisfied}, {"total", t.total}};
    }
  }
  agg["attribute_scores"] = std::move(attrs);

  return {{"samples", std::move(samples)}, {"aggregate", std::move(agg)}};
}

void write_report(const fs::path& path, const AggregateReport& report) {
  write_file_atomic(path, aggregate_report_to_json(report).dump(2) + "\n");
}

}  // namespace lexeval
