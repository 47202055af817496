#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lexeval/core.hpp"
#include "lexeval/text.hpp"

namespace lexeval {

using Json = nlohmann::ordered_json;

// Calls `visit(line_number, record)` for every non-blank line. Parse failures
// raise DataError naming the line.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const Json&)>& visit);

// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
void write_jsonl_atomic(const std::filesystem::path& path, const std::vector<Json>& records);

std::string read_file(const std::filesystem::path& path);

// Schema-checked field access. Errors name `context`.
const Json& require(const Json& record, std::string_view key, const std::string& context);
std::string require_string(const Json& record, std::string_view key, const std::string& context);
double require_number(const Json& record, std::string_view key, const std::string& context);
long long require_integer(const Json& record, std::string_view key, const std::string& context);

OcrResult parse_ocr(const Json& record, NormalizationPolicy policy, const std::string& context);
Json ocr_to_json(const OcrResult& ocr);

// One `samples.jsonl` record. Splits tokens on whitespace, normalizes them,
// clamps boxes to the image and remaps condition indices onto the tokens.
Sample parse_sample(const Json& record, NormalizationPolicy policy, const std::string& context);
Json sample_to_json(const Sample& sample);

std::vector<Sample> load_samples(const std::filesystem::path& path,
                                 NormalizationPolicy policy = NormalizationPolicy::Default);
void write_samples(const std::filesystem::path& path, const std::vector<Sample>& samples);

Json sample_report_to_json(const SampleReport& report);
Json aggregate_report_to_json(const AggregateReport& report);
void write_report(const std::filesystem::path& path, const AggregateReport& report);

}  // namespace lexeval
