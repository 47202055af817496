#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexeval/conditions.hpp"

namespace lexeval {

// Pixel rectangle, x0 < x1 and y0 < y1 for a valid box.
struct BBox {
  double x0 = 0;
  double y0 = 0;
  double x1 = 0;
  double y1 = 0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x0 + x1); }
  double center_y() const { return 0.5 * (y0 + y1); }
  bool is_proper() const { return x0 < x1 && y0 < y1; }
  bool contains(const BBox& other) const {
    return x0 <= other.x0 && y0 <= other.y0 && other.x1 <= x1 && other.y1 <= y1;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

struct ImageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

BBox clamp_to_image(const BBox& box, ImageSize image);

struct OcrWord {
  std::string text;
  BBox bbox;
  double confidence = 1.0;

  friend bool operator==(const OcrWord&, const OcrWord&) = default;
};

struct OcrResult {
  std::vector<OcrWord> words;
  ImageSize image;

  std::vector<std::string> texts() const;

  friend bool operator==(const OcrResult&, const OcrResult&) = default;
};

// Words a prompt asks to be rendered, with optional per-word conditions.
struct GroundTruthText {
  std::vector<std::string> words;
  std::vector<AttributeCondition> conditions;

  friend bool operator==(const GroundTruthText&, const GroundTruthText&) = default;
};

struct Sample {
  std::string id;
  GroundTruthText gt;
  OcrResult ocr;

  friend bool operator==(const Sample&, const Sample&) = default;
};

// Throw DataError naming `context` when an invariant does not hold.
void validate(const GroundTruthText& gt, const std::string& context);
void validate(const OcrResult& ocr, const std::string& context);

struct AttributeTally {
  std::size_t satisfied = 0;
  std::size_t total = 0;

  std::optional<double> score() const;
  AttributeTally& operator+=(const AttributeTally& other);
};

struct AttributeTallies {
  AttributeTally color;
  AttributeTally font;
  AttributeTally position;

  AttributeTally& operator[](AttributeKind kind);
  const AttributeTally& operator[](AttributeKind kind) const;
  AttributeTallies& operator+=(const AttributeTallies& other);
  bool empty() const { return color.total + font.total + position.total == 0; }
};

struct SampleReport {
  std::string sample_id;
  std::size_t gt_word_count = 0;
  std::size_t ocr_word_count = 0;
  double pned = 0;
  double recall = 0;
  double precision = 0;
  double ocr_f1 = 0;
  double word_accuracy = 0;
  bool sentence_exact = false;
  // Only kinds with at least one scored condition carry a value.
  AttributeTallies attributes;
};

struct MetricSummary {
  double mean = 0;
  double std = 0;  // n-1 denominator, 0 for a single sample
};

struct MetricSummaries {
  MetricSummary pned;
  MetricSummary recall;
  MetricSummary precision;
  MetricSummary ocr_f1;
  MetricSummary word_accuracy;
  MetricSummary sentence_accuracy;
};

struct TierCounts {
  std::size_t easy = 0;
  std::size_t medium = 0;
  std::size_t hard = 0;
  std::size_t out_of_range = 0;
};

struct AggregateReport {
  std::vector<SampleReport> samples;
  std::size_t count = 0;
  std::optional<MetricSummaries> metrics;  // absent when count == 0
  TierCounts tiers;
  AttributeTallies attributes;  // corpus-wide
};

}  // namespace lexeval
