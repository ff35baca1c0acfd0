#include <gtest/gtest.h>

#include <sstream>

#include "skeldet/report.hpp"

namespace skeldet {
namespace {

VerificationReport sample() {
  VerificationReport report;
  report.suite = "sample";
  report.seed = 5;
  report.params = {{"n_max", 3}};
  TrialRecord ok;
  ok.instance = {{"k", 1}};
  ok.dim = 20;
  ok.det = 20;
  ok.pass = true;
  report.add(ok);
  TrialRecord bad;
  bad.relation = Relation::kAtLeast;
  bad.dim = 1;
  bad.det = parse_bigint("123456789012345678901234567890");
  bad.pass = false;
  report.add(bad);
  return report;
}

TEST(Report, IdsAndFailures) {
  const VerificationReport report = sample();
  EXPECT_EQ(report.trials[0].id, 0u);
  EXPECT_EQ(report.trials[1].id, 1u);
  EXPECT_EQ(report.total(), 2u);
  EXPECT_EQ(report.failed(), 1u);
  ASSERT_EQ(report.failures().size(), 1u);
  EXPECT_EQ(report.failures()[0]->id, 1u);
  EXPECT_FALSE(report.all_passed());
}

TEST(Report, JsonSchema) {
  const auto j = report_to_json(sample(), false);
  EXPECT_FALSE(j.contains("timestamp"));
  EXPECT_EQ(j.at("suite"), "sample");
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("params").at("n_max"), 3);
  const auto& t = j.at("trials");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].at("dim"), "20");
  EXPECT_EQ(t[0].at("relation"), "eq");
  EXPECT_TRUE(t[0].at("formula").is_null());
  EXPECT_EQ(t[1].at("det"), "123456789012345678901234567890");
  EXPECT_EQ(t[1].at("relation"), "geq");
  EXPECT_EQ(t[1].at("pass"), false);
  EXPECT_EQ(j.at("summary").at("total"), 2);
  EXPECT_EQ(j.at("summary").at("failed"), 1);
  EXPECT_TRUE(j.at("summary").contains("elapsed_ms"));
  EXPECT_TRUE(report_to_json(sample()).contains("timestamp"));
}

TEST(Report, CsvAndText) {
  std::ostringstream csv;
  write_report_csv(csv, sample());
  EXPECT_NE(csv.str().find("123456789012345678901234567890"), std::string::npos);
  std::ostringstream text;
  write_report_text(text, sample());
  EXPECT_NE(text.str().find("1 failed"), std::string::npos);
}

}  // namespace
}  // namespace skeldet
