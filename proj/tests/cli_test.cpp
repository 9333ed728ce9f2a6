// Copyright 2026 The Novelty Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "novelty/funding.hpp"
#include "novelty/researcher.hpp"
#include "novelty/valuation.hpp"

namespace novelty::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result knowctl(std::vector<std::string> args) {
  args.insert(args.begin(), "knowctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NOVELTY_TEST_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string c; std::getline(is, c, ',');) out.push_back(c);
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("knowctl_test_" + name);
}

TEST(Cli, HelpAndVersionSucceed) {
  EXPECT_EQ(knowctl({"--help"}).code, kExitOk);
  const Result v = knowctl({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_FALSE(v.out.empty());
}

TEST(Cli, MissingSubcommandIsInputError) { EXPECT_EQ(knowctl({}).code, kExitBadInput); }

TEST(Cli, UnknownOptionIsInputError) {
  EXPECT_EQ(knowctl({"value", "--bogus", "1"}).code, kExitBadInput);
}

TEST(Cli, ValueOfSinglePoint) {
  const Result r = knowctl({"value"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["v"].get<double>(), 1.0);
  EXPECT_EQ(j["areas"].size(), 2u);
}

TEST(Cli, ValueFromFile) {
  const Result r = knowctl({"value", "--knowledge-file", data("gap7.json"), "--q", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out)["v"].get<double>(), 2.0 + area_value(7.0, 2.0), 1e-12);
}

TEST(Cli, BadFileIsInputError) {
  const Result r = knowctl({"value", "--knowledge-file", data("bad.json")});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(knowctl({"value", "--knowledge-file", data("missing.json")}).code, kExitBadInput);
}

TEST(Cli, InvalidParametersAreInputErrors) {
  EXPECT_EQ(knowctl({"value", "--q", "0"}).code, kExitBadInput);
  EXPECT_EQ(knowctl({"choose", "--eta", "-1"}).code, kExitBadInput);
  EXPECT_EQ(knowctl({"moonshot", "--delta", "1"}).code, kExitBadInput);
  EXPECT_EQ(knowctl({"funding", "--kappa", "0.5"}).code, kExitBadInput);
  EXPECT_EQ(knowctl({"funding", "--tech", "step"}).code, kExitBadInput);
  EXPECT_EQ(knowctl({"value", "--curve", "W"}).code, kExitBadInput);
}

TEST(Cli, CurveMatchesClosedForm) {
  // The polynomial form holds while the new bridge is at most 4q long.
  const Result r =
      knowctl({"value", "--curve", "V", "--X", "inf", "--points", "41", "--d-max", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 43u);
  EXPECT_EQ(ls[0].rfind("# knowctl ", 0), 0u);
  EXPECT_EQ(ls[1], "d,X,V");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto c = cells(ls[i]);
    ASSERT_EQ(c.size(), 3u);
    const double d = std::stod(c[0]);
    EXPECT_EQ(c[1], "inf");
    EXPECT_NEAR(std::stod(c[2]), d - d * d / 6.0, 1e-15);
  }
}

TEST(Cli, CsvNumbersRoundTrip) {
  const Result r = knowctl({"value", "--curve", "V", "--X", "inf", "--points", "7"});
  const auto c = cells(lines(r.out)[3]);
  const double d = std::stod(c[0]);
  EXPECT_EQ(d, 8.0 / 6.0);
  EXPECT_EQ(std::stod(c[2]), benefit(d, Length::infinite(), 1.0));
}

TEST(Cli, ChooseExpandsFromSinglePoint) {
  const Result r = knowctl({"choose", "--eta", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json c = json::parse(r.out)["choice"];
  const ResearchChoice e = opt_expand({1.0, 1.0});
  EXPECT_EQ(c["action"].get<std::string>(), "expand");
  EXPECT_NEAR(c["d"].get<double>(), e.d, 1e-12);
  EXPECT_NEAR(c["rho"].get<double>(), e.rho, 1e-12);
}

TEST(Cli, ChooseCostless) {
  const json c = json::parse(knowctl({"choose", "--eta", "0"}).out)["choice"];
  EXPECT_NEAR(c["d"].get<double>(), 3.0, 1e-9);
  EXPECT_EQ(c["rho"].get<double>(), 1.0);
}

TEST(Cli, ChooseCutoffs) {
  for (const char* eta : {"0.1", "1", "10"}) {
    const json j = json::parse(knowctl({"choose", "--cutoffs", "--eta", eta}).out);
    EXPECT_NEAR(j["cutoffs"]["researcher"]["x_dot"].get<double>(), 4.5486, 1e-4);
  }
}

TEST(Cli, SimulateIsReproducible) {
  const auto a = temp_path("a.jsonl"), b = temp_path("b.jsonl");
  for (const auto& p : {a, b}) {
    ASSERT_EQ(knowctl({"simulate", "--seed", "7", "--periods", "50", "--out", p.string()}).code,
              kExitOk);
  }
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {});
  const std::string sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, SimulateRejectsEmptyHorizon) {
  EXPECT_EQ(knowctl({"simulate", "--periods", "0"}).code, kExitBadInput);
}

TEST(Cli, ForcedSuccessExpandsAtConstantStep) {
  const Result r = knowctl({"simulate", "--force-success", "--periods", "3", "--eta", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  const double d = opt_expand({1.0, 1.0}).d;
  for (int t = 0; t < 3; ++t) {
    const json j = json::parse(ls[t]);
    EXPECT_TRUE(j["success"].get<bool>());
    EXPECT_NEAR(j["x"].get<double>(), (t + 1) * d, 1e-9);
  }
  const json s = json::parse(ls[3]);
  EXPECT_TRUE(s["summary"].get<bool>());
  EXPECT_TRUE(s["halted_at"].is_null());
}

TEST(Cli, ForcedMoonshotBridgesAtMidpoint) {
  const Result r = knowctl(
      {"simulate", "--force-success", "--periods", "3", "--eta", "1", "--moonshot", "6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_NEAR(json::parse(ls[0])["x"].get<double>(), 6.0, 1e-12);
  EXPECT_NEAR(json::parse(ls[1])["x"].get<double>(), 3.0, 1e-9);
  EXPECT_NEAR(json::parse(ls[2])["x"].get<double>(), 6.0 + opt_expand({1.0, 1.0}).d, 1e-9);
}

TEST(Cli, MoonshotPaperQuadruple) {
  const Result r = knowctl({"moonshot", "--mode", "paper", "--eta", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json b = json::parse(r.out)["benchmark"];
  EXPECT_NEAR(b["d_inf"].get<double>(), 2.74272, 1e-4);
  EXPECT_NEAR(b["rho_inf"].get<double>(), 0.31075, 1e-4);
  EXPECT_NEAR(b["rho_6q"].get<double>(), 0.453226, 1e-5);
  EXPECT_NEAR(b["benefit_delta1"].get<double>(), 0.0283413, 1e-5);
}

TEST(Cli, MoonshotSweepHeader) {
  const Result r = knowctl({"moonshot", "--sweep", "xhat", "--points", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[1], "x_hat,npv_moonshot,npv_myopic,benefit");
}

std::vector<std::vector<std::string>> rows_of(const std::string& out, const std::string& kind) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : lines(out)) {
    const auto c = cells(l);
    if (!c.empty() && c[0] == kind) rows.push_back(c);
  }
  return rows;
}

TEST(Cli, FundingInteriorMix) {
  const Result r = knowctl({"funding", "--K", "3", "--kappa", "16", "--s", "6", "--eta0", "1",
                            "--grid", "401", "--points", "21"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out)[1], "kind,zeta,h,eta,rho,d,value,label");
  EXPECT_EQ(rows_of(r.out, "frontier").size(), 21u);
  const auto ind = rows_of(r.out, "indifference");
  ASSERT_FALSE(ind.empty());
  bool upper = false;
  for (const auto& row : ind) {
    EXPECT_EQ(row[1], "nan");
    const double rho = std::stod(row[4]), d = std::stod(row[5]);
    EXPECT_NEAR(rho * benefit(d, Length::infinite(), 1.0), std::stod(row[6]), 1e-12);
    upper = upper || row[7] == "upper";
  }
  EXPECT_TRUE(upper);
  const auto m = rows_of(r.out, "myopic");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0][7], "mix");
  EXPECT_GT(std::stod(m[0][5]), 3.0);
  EXPECT_LT(std::stod(m[0][5]), 6.0);
}

TEST(Cli, FundingWithoutDiscountingIsMyopic) {
  const Result r = knowctl({"funding", "--delta", "0", "--grid", "201", "--points", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto m = rows_of(r.out, "myopic")[0], f = rows_of(r.out, "forward")[0];
  m.erase(m.begin());
  f.erase(f.begin());
  EXPECT_EQ(m, f);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  const auto cfg = temp_path("cfg.toml");
  {
    std::ofstream o(cfg);
    o << "q = 2.0\neta = 4.0\n";
  }
  const json a = json::parse(knowctl({"--config", cfg.string(), "choose"}).out);
  EXPECT_EQ(a["q"].get<double>(), 2.0);
  EXPECT_EQ(a["eta"].get<double>(), 4.0);
  const json b = json::parse(knowctl({"--config", cfg.string(), "--eta", "0.5", "choose"}).out);
  EXPECT_EQ(b["q"].get<double>(), 2.0);
  EXPECT_EQ(b["eta"].get<double>(), 0.5);
  const json c = json::parse(knowctl({"choose"}).out);
  EXPECT_EQ(c["q"].get<double>(), 1.0);
  std::filesystem::remove(cfg);
}

TEST(Cli, ConfigRerunIsByteIdentical) {
  const auto cfg = temp_path("sweep.toml");
  {
    std::ofstream o(cfg);
    o << "eta = 0.5\npoints = 9\n";
  }
  const Result a = knowctl({"--config", cfg.string(), "moonshot", "--sweep", "eta"});
  const Result b = knowctl({"--config", cfg.string(), "moonshot", "--sweep", "eta"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(lines(a.out)[0].find("eta=0.5"), std::string::npos);
  std::filesystem::remove(cfg);
}

TEST(Cli, UnwritableOutputIsInputError) {
  EXPECT_EQ(knowctl({"value", "--out", "/nonexistent-dir/x.json"}).code, kExitBadInput);
}

}  // namespace
}  // namespace novelty::cli
