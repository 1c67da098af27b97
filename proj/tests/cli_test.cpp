// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "randmeas/correlations.hpp"

namespace randmeas::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("randmeas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string prefix(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST(RunConfigTest, RenderOfParseIsCanonical) {
  const std::vector<std::vector<std::string>> inputs = {
      {"moments", "--state", "ghz:4", "--orders", "2", "--design", "3", "--subset", "full"},
      {"sample", "--state", "product2", "--samples", "10", "--seed", "7"},
      {"criteria", "--state", "bisep4", "--test", "gme4", "--structure", "--z", "2.5"},
      {"design", "--order", "5", "--out", "pts"},
      {"moments", "--state", "cluster:4", "--orders", "2,4", "--design", "5", "--half"},
  };
  for (const auto& args : inputs) {
    const RunConfig parsed = parse_run_config(args);
    const auto canonical = render_run_config(parsed);
    EXPECT_EQ(render_run_config(parse_run_config(canonical)), canonical);
    EXPECT_EQ(parse_run_config(canonical).to_json(), parsed.to_json());
  }
  EXPECT_EQ(parse_run_config(inputs[1]).to_json()["state"], "product:2");
  EXPECT_EQ(parse_run_config(inputs[2]).to_json()["state"], "bisep4:0.2");
}

TEST(RunConfigTest, RejectsBadArguments) {
  EXPECT_THROW(parse_run_config({"moments", "--orders", "2,x"}), std::invalid_argument);
  EXPECT_THROW(parse_run_config({"frobnicate"}), std::invalid_argument);
  EXPECT_THROW(parse_run_config({"moments", "--format", "xml"}), std::invalid_argument);
}

TEST_F(CliTest, UnknownStateNamesValidKinds) {
  const Result r = invoke({"sample", "--state", "dicke:3", "--samples", "5"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("ghz:N"), std::string::npos);
}

TEST_F(CliTest, SampleWritesFilesAndRejectsZeroSamples) {
  const std::string out = prefix("bell");
  const Result r =
      invoke({"sample", "--state", "bell", "--samples", "2000", "--seed", "7", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* ext : {".samples.csv", ".hist.csv", ".json", ".reference.csv"}) {
    EXPECT_TRUE(fs::exists(out + ext)) << ext;
  }
  const auto meta = nlohmann::json::parse(slurp(out + ".json"));
  EXPECT_EQ(meta["config"]["seed"], 7);
  EXPECT_EQ(meta["version"], RANDMEAS_VERSION);
  EXPECT_EQ(meta["reference_density"], randmeas::analytic_pdf(randmeas::ReferenceKind::kBell).name());

  const Result zero = invoke({"sample", "--state", "product2", "--samples", "0", "--out", out});
  EXPECT_EQ(zero.code, 1);
}

TEST_F(CliTest, SampleIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> base = {"sample", "--state", "werner:0.577", "--samples", "3000",
                                         "--seed", "11"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", prefix("a")});
  b.insert(b.end(), {"--out", prefix("b")});
  ASSERT_EQ(invoke(a).code, 0);
  ASSERT_EQ(invoke(b).code, 0);
  EXPECT_EQ(slurp(prefix("a") + ".samples.csv"), slurp(prefix("b") + ".samples.csv"));
  EXPECT_EQ(slurp(prefix("a") + ".hist.csv"), slurp(prefix("b") + ".hist.csv"));
}

TEST_F(CliTest, WernerSamplesStayInSupport) {
  const Result r = invoke({"sample", "--state", "werner:0.577", "--samples", "5000", "--seed", "3",
                           "--out", prefix("w")});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(slurp(prefix("w") + ".samples.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const double e = std::stod(line.substr(line.find(',') + 1));
    ASSERT_LE(std::abs(e), 0.578);
  }
}

TEST_F(CliTest, MomentsGhzFourDesign) {
  const Result r =
      invoke({"moments", "--state", "ghz:4", "--orders", "2", "--design", "3", "--subset", "full"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["moments"].size(), 1u);
  EXPECT_NEAR(j["moments"][0]["value"].get<double>(), 1.0 / 9.0, 1e-12);
  EXPECT_TRUE(j["cross_checks_pass"].get<bool>());
  EXPECT_FALSE(j["cross_checks"].empty());
}

TEST_F(CliTest, MomentsGhzThreeSecondAndFourth) {
  const Result r = invoke({"moments", "--state", "ghz:3", "--orders", "2,4", "--design", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["moments"][0]["value"].get<double>(), 4.0 / 27.0, 1e-12);
  EXPECT_NEAR(j["moments"][1]["value"].get<double>(), 64.0 / 1125.0, 1e-12);
}

TEST_F(CliTest, MomentsFiniteShotUnbiased) {
  const Result r = invoke({"moments", "--state", "bell", "--orders", "2", "--samples", "100000",
                           "--shots", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = nlohmann::json::parse(r.out)["moments"][0];
  EXPECT_LT(std::abs(m["value"].get<double>() - 1.0 / 3.0), 4.0 * m["std_error"].get<double>());
  EXPECT_EQ(m["K"], 2);
}

TEST_F(CliTest, MomentsMonteCarloAllSubsetsCsv) {
  const Result r = invoke({"moments", "--state", "w:3", "--orders", "2,4", "--samples", "4000",
                           "--subset", "all", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 14);
}

TEST_F(CliTest, MomentsRejectsInsufficientDesign) {
  const Result r = invoke({"moments", "--state", "bell", "--orders", "4", "--design", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("design order insufficient"), std::string::npos);
}

TEST_F(CliTest, CriteriaGhzFour) {
  const Result r = invoke({"criteria", "--state", "ghz:4", "--test", "gme4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = nlohmann::json::parse(r.out)["verdicts"][0];
  EXPECT_TRUE(v["detected"].get<bool>());
  EXPECT_NEAR(v["statistic"].get<double>(), 6.0 / 81.0, 1e-12);
  EXPECT_NEAR(v["threshold"].get<double>(), 0.0, 1e-12);
}

TEST_F(CliTest, CriteriaBiseparableStructure) {
  const Result r = invoke({"criteria", "--state", "bisep4:0.2", "--test", "gme4", "--structure"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["verdicts"][0]["detected"].get<bool>());
  EXPECT_EQ(j["structure"]["flagged"], nlohmann::json::parse("[[1,2],[3,4]]"));
}

TEST_F(CliTest, CriteriaWStateAtBoundary) {
  const Result r = invoke({"criteria", "--state", "w:4", "--test", "wclass"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = nlohmann::json::parse(r.out)["verdicts"][0];
  EXPECT_NEAR(v["threshold"].get<double>(), 4.0 / 81.0, 1e-15);
  EXPECT_NEAR(v["margin"].get<double>(), 0.0, 1e-12);
}

TEST_F(CliTest, CriteriaMismatchIsInputError) {
  const Result r = invoke({"criteria", "--state", "ghz:3", "--test", "gme4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("4 qubits"), std::string::npos);
  EXPECT_EQ(invoke({"criteria", "--state", "bell", "--test", "bisep3"}).code, 1);
}

TEST_F(CliTest, DesignExport) {
  for (const auto& [order, rows] : {std::pair{3, 6}, std::pair{5, 12}}) {
    const std::string out = prefix("d" + std::to_string(order));
    const Result r = invoke({"design", "--order", std::to_string(order), "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["validation"]["pass"].get<bool>());
    std::istringstream in(slurp(out + ".csv"));
    std::string line;
    int count = -1;
    while (std::getline(in, line)) ++count;
    EXPECT_EQ(count, rows);
  }
  const Result bad = invoke({"design", "--order", "4", "--out", prefix("d4")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("3, 5"), std::string::npos);
}

TEST_F(CliTest, HelpDocumentsStateGrammar) {
  const Result r = invoke({"sample", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("werner:P"), std::string::npos);
}

}  // namespace
}  // namespace randmeas::cli
