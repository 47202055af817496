#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lexeval/io.hpp"
#include "lexeval/ocr_metrics.hpp"
#include "schema_check.hpp"

using namespace lexeval;

namespace {

Json load_schema() {
  std::ifstream in(LEXEVAL_SCHEMA_PATH);
  std::ostringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

Json sample_report() {
  SampleReport r;
  r.sample_id = "a";
  r.recall = 0.5;
  r.attributes.color = {1, 2};
  return aggregate_report_to_json(aggregate({r}));
}

}  // namespace

TEST(ReportSchema, AcceptsGeneratedReports) {
  const Json schema = load_schema();
  EXPECT_TRUE(schema::validate(sample_report(), schema).empty());
  EXPECT_TRUE(schema::validate(aggregate_report_to_json(aggregate({})), schema).empty());
}

TEST(ReportSchema, RejectsViolations) {
  const Json schema = load_schema();
  Json bad = sample_report();
  bad["samples"][0]["recall"] = 1.5;
  EXPECT_FALSE(schema::validate(bad, schema).empty());

  bad = sample_report();
  bad["aggregate"].erase("tiers");
  EXPECT_FALSE(schema::validate(bad, schema).empty());

  bad = sample_report();
  bad["aggregate"]["surprise"] = 1;
  EXPECT_FALSE(schema::validate(bad, schema).empty());

  bad = sample_report();
  bad["samples"][0]["sentence_exact"] = "yes";
  EXPECT_FALSE(schema::validate(bad, schema).empty());
}
