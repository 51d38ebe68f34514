#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "g2count/counts.hpp"

using namespace g2count;

namespace {

std::string writeTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

}  // namespace

TEST(Counts, Examples) {
  const auto& cls = fixtures::classes();
  EXPECT_EQ(countQuaternionic(6, cls).total, 1);
  EXPECT_EQ(countQuaternionic(8, cls).total, 2);
  EXPECT_EQ(countQuaternionic(25, cls).total, 121);
  EXPECT_EQ(countQuaternionic(52, cls).total, 4780);
  const auto r12 = countQuaternionic(12, cls);
  EXPECT_EQ(r12.g2cTerm, 6);
  EXPECT_EQ(r12.correction, 3);
  EXPECT_EQ(r12.total, 9);
  EXPECT_EQ(r12.jlNote, JLKind::EvenAddition);
  const auto r11 = countQuaternionic(11, cls);
  EXPECT_EQ(r11.g2cTerm, 3);
  EXPECT_EQ(r11.correction, -2);
  EXPECT_EQ(r11.jlNote, JLKind::OddSubtraction);
}

TEST(Counts, WeightTwoAndBelowAreRejected) {
  EXPECT_THROW(countQuaternionic(2, fixtures::classes()), std::invalid_argument);
  EXPECT_THROW(countQuaternionic(-5, fixtures::classes()), std::invalid_argument);
  EXPECT_THROW(countRange(2, 10, fixtures::classes()), std::invalid_argument);
  EXPECT_THROW(countRange(10, 9, fixtures::classes()), std::invalid_argument);
}

TEST(Counts, ReportInvariants) {
  for (const auto& r : countRange(3, 150, fixtures::classes())) {
    EXPECT_GE(r.total, 0) << r.k;
    EXPECT_EQ(r.total, r.g2cTerm + r.correction);
    EXPECT_EQ(r.jlPairs, std::abs(r.correction)) << r.k;
    EXPECT_EQ(r.jlNote, r.k % 2 == 0 ? JLKind::EvenAddition : JLKind::OddSubtraction);
    if (r.k % 2 == 0) {
      EXPECT_GE(r.correction, 0);
    } else {
      EXPECT_LE(r.correction, 0);
    }
  }
}

TEST(Counts, RangeIsIndependentOfWorkerCount) {
  const auto one = countRange(3, 60, fixtures::classes(), 1);
  const auto many = countRange(3, 60, fixtures::classes(), 7);
  EXPECT_EQ(one, many);
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].k, static_cast<std::int64_t>(i) + 3);
}

TEST(Counts, FixturePasses) {
  const auto r = verifyFixture(fixtures::dataPath("counts_k3_to_52.json"), fixtures::classes());
  EXPECT_TRUE(r.pass) << describe(r);
  EXPECT_EQ(readFixture(fixtures::dataPath("counts_k3_to_52.json")).size(), 50u);
}

TEST(Counts, PerturbedFixtureFails) {
  auto f = readFixture(fixtures::dataPath("counts_k3_to_52.json"));
  f[30] += 1;
  const auto r = compareFixture(f, countRange(3, 52, fixtures::classes()));
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches[0].k, 30);
  EXPECT_EQ(r.mismatches[0].expected, 342);
  EXPECT_EQ(r.mismatches[0].actual, 341);
  EXPECT_NE(describe(r).find("k=30"), std::string::npos);
}

TEST(Counts, MalformedFixtures) {
  EXPECT_THROW(parseFixture("{}"), FixtureMalformed);
  EXPECT_THROW(parseFixture("[1, 2]"), FixtureMalformed);
  EXPECT_THROW(parseFixture("{\"3\": 0,"), FixtureMalformed);
  EXPECT_THROW(parseFixture("{\"three\": 0}"), FixtureMalformed);
  EXPECT_THROW(parseFixture("{\"3\": \"0\"}"), FixtureMalformed);
  EXPECT_THROW(readFixture("/nonexistent/fixture.json"), FixtureMissing);
  const auto path = writeTemp("g2count_empty_fixture.json", "{}");
  EXPECT_THROW(verifyFixture(path, fixtures::classes()), FixtureMalformed);
  std::filesystem::remove(path);
}

TEST(Counts, Formats) {
  const auto reports = countRange(3, 52, fixtures::classes());
  const auto csv = formatCsv(reports);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,g2c_term,correction,total,jl_pairs");
  EXPECT_NE(csv.find("\n12,6,3,9,3\n"), std::string::npos);

  const auto j = nlohmann::json::parse(formatJson(reports));
  ASSERT_EQ(j.size(), 50u);
  EXPECT_EQ(j[49]["k"], 52);
  EXPECT_EQ(j[49]["total"], 4780);
  EXPECT_EQ(j[8]["jlNote"], "OddSubtraction");

  const auto table = formatTable(reports);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 11);
  EXPECT_NE(table.find("  52     4780"), std::string::npos);
}
