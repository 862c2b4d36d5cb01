#include <gtest/gtest.h>

#include <algorithm>

#include <json.hpp>

#include "almalt/corpus.hpp"
#include "almalt/verify.hpp"
#include "corpus_text.hpp"

using namespace almalt;

namespace {

const CorpusRow& row_named(const std::vector<CorpusRow>& rows, const std::string& name) {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const CorpusRow& r) { return r.name == name; });
  if (it == rows.end()) throw std::runtime_error("no row " + name);
  return *it;
}

const VerificationReport& pristine_report() {
  static const VerificationReport report = verify_all(load_embedded_corpus(), 1, "digest");
  return report;
}

}  // namespace

TEST(VerifyRow, ResolvedRow) {
  const auto rows = load_embedded_corpus();
  const auto r = verify_row(row_named(rows, "K12n176"));
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_EQ(r.genus_rep, 1);
  EXPECT_GE(*r.genus_min, 1);
  for (Check c : all_checks) EXPECT_EQ(r[c], CheckState::pass) << to_string(c);
  EXPECT_TRUE(r.notes.empty());
}

TEST(VerifyRow, SwappedRepresentationFailsJones) {
  const auto rows = load_embedded_corpus();
  CorpusRow row = row_named(rows, "K12n176");
  row.dt_rep = row_named(rows, "K12n204").dt_rep;
  const auto r = verify_row(row);
  EXPECT_EQ(r.verdict, Verdict::failed);
  EXPECT_EQ(r[Check::jones_match_up_to_mirror], CheckState::fail);
  EXPECT_EQ(r[Check::realizable_rep], CheckState::pass);
  EXPECT_EQ(r[Check::rep_almost_alternating], CheckState::pass);
}

TEST(VerifyRow, OpenRow) {
  const auto rows = load_embedded_corpus();
  const auto r = verify_row(row_named(rows, "K12n253"));
  EXPECT_EQ(r.verdict, Verdict::open);
  EXPECT_EQ(r[Check::realizable_min], CheckState::pass);
  EXPECT_EQ(r[Check::span_lt_crossing_number], CheckState::pass);
  ASSERT_TRUE(r.span);
  EXPECT_LT(*r.span, 12);
  EXPECT_EQ(r[Check::realizable_rep], CheckState::not_applicable);
  EXPECT_EQ(r[Check::jones_match_up_to_mirror], CheckState::not_applicable);
  EXPECT_FALSE(r.genus_rep);
}

TEST(VerifyRow, AnomalousRowWarns) {
  const auto rows = load_embedded_corpus();
  const auto r = verify_row(row_named(rows, "K12n748"));
  EXPECT_EQ(r[Check::conway_substitutions_ok], CheckState::warn);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_FALSE(r.notes.empty());
}

TEST(VerifyRow, SerialAndParallelKernelsAgree) {
  const auto rows = load_embedded_corpus();
  for (const char* name : {"K12n176", "K11n183", "K12n253"})
    EXPECT_EQ(verify_row(row_named(rows, name), Exec::serial), verify_row(row_named(rows, name), Exec::parallel));
}

TEST(VerifyAll, PristineTotals) {
  const auto& report = pristine_report();
  EXPECT_EQ(report.verified, 155);
  EXPECT_EQ(report.failed, 0);
  EXPECT_EQ(report.open, 37);
  EXPECT_EQ(report.rows.size(), 192u);
  EXPECT_TRUE(std::is_sorted(report.rows.begin(), report.rows.end(),
                             [](const RowResult& a, const RowResult& b) { return a.name < b.name; }));
}

TEST(VerifyAll, CorruptedRepresentationFailsOneRow) {
  const auto text = testing_corpus::edited("K12n176", [](const std::string& l) {
    return testing_corpus::replace_once(l, "{{17},{4,8,14,2,24,32,6,30,26,28,-16,12,34,18,20,22,10}}",
                                        "{{17},{4,8,30,2,22,32,-18,24,26,28,34,14,16,12,6,20,10}}");
  });
  auto rows = load_corpus(text);
  validate_corpus(rows);
  const auto report = verify_all(rows, 4, sha256_hex(text));
  EXPECT_EQ(report.failed, 1);
  EXPECT_EQ(report.verified, 154);
}

TEST(VerifyAll, WorkerCountDoesNotChangeReport) {
  const auto rows = load_embedded_corpus();
  const auto eight = verify_all(rows, 8, "digest");
  for (auto fmt : {ReportFormat::text, ReportFormat::json, ReportFormat::csv})
    EXPECT_EQ(render_report(pristine_report(), fmt, false), render_report(eight, fmt, false));
}

TEST(Report, JsonSchema) {
  const auto doc = nlohmann::json::parse(render_report(pristine_report(), ReportFormat::json, false));
  EXPECT_EQ(doc["summary"]["verified"], 155);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["summary"]["open"], 37);
  EXPECT_FALSE(doc["summary"].contains("duration_ms"));
  ASSERT_EQ(doc["rows"].size(), 192u);
  for (const char* key : {"name", "verdict", "checks", "jones_min", "span", "genus_min", "genus_rep"})
    EXPECT_TRUE(doc["rows"][0].contains(key)) << key;
  EXPECT_EQ(doc["rows"][0]["checks"].size(), check_count);
  EXPECT_EQ(doc["tool_version"], std::string(tool_version()));
  EXPECT_TRUE(nlohmann::json::parse(render_report(pristine_report(), ReportFormat::json, true))["summary"].contains(
      "duration_ms"));
}

TEST(Report, CsvAndText) {
  const auto csv = render_report(pristine_report(), ReportFormat::csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 193);
  EXPECT_EQ(csv.rfind("name,status,verdict,realizable_min", 0), 0u);
  const auto text = render_report(pristine_report(), ReportFormat::text, false);
  EXPECT_NE(text.find("verified 155  failed 0  open 37"), std::string::npos);
  EXPECT_EQ(text.find("duration"), std::string::npos);
}
