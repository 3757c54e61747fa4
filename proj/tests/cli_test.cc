// Copyright 2026 The hcauthor Authors.
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


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "hcauthor/robustness.h"

namespace hcauthor {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Data(const std::string &name) {
  return std::string(HCAUTHOR_TESTDATA) + "/" + name;
}

std::vector<std::string> Lines(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Fields(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

// Lines that are not "# key=value" comments.
std::vector<std::string> Body(const std::string &s) {
  std::vector<std::string> out;
  for (const std::string &l : Lines(s)) {
    if (l.rfind("#", 0) != 0) out.push_back(l);
  }
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcauthor_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const {
    return (dir_ / name).string();
  }

  // A small synthetic suite on disk: A0.jsonl, A1.jsonl, A2.jsonl.
  void Synth(const std::string &docs = "5") {
    const CliRun r = Cli({"synth", "--out-dir", dir_.string(), "--docs", docs,
                       "--seed", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }

  fs::path dir_;
};

TEST_F(CliTest, SynthWritesOneFilePerAuthor) {
  Synth();
  for (const char *id : {"A0", "A1", "A2"}) {
    EXPECT_TRUE(fs::exists(Path(std::string(id) + ".jsonl")));
  }
  std::ifstream f(Path("A0.jsonl"));
  std::size_t lines = 0;
  for (std::string l; std::getline(f, l);) ++lines;
  EXPECT_EQ(lines, 5u);
}

TEST_F(CliTest, IngestXmlRoundTrip) {
  const CliRun r = Cli({"ingest", Data("mini.xml"), "-o", Path("mini.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("unique lemmas:"), std::string::npos);
  const CliRun again = Cli({"ingest", Path("mini.jsonl")});
  ASSERT_EQ(again.code, kExitOk) << again.err;
  std::ifstream f(Path("mini.jsonl"));
  std::stringstream first;
  first << f.rdbuf();
  EXPECT_EQ(again.out, first.str());
  EXPECT_EQ(again.err, r.err);
}

TEST_F(CliTest, IngestReportsCounts) {
  const CliRun r = Cli({"ingest", Data("mini.xml")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // 1254 and a are two lemmas of one word; the name collapses to a code
  // that is itself counted once.
  const CliRun raw = Cli({"ingest", Data("mini.xml"), "--no-collapse-names"});
  ASSERT_EQ(raw.code, kExitOk) << raw.err;
  EXPECT_NE(r.err.find("Mini.1: 9 tokens, 9 lemmas"), std::string::npos);
  EXPECT_NE(r.err.find("unique lemmas: 9"), std::string::npos);
  EXPECT_NE(r.out.find("<Np>"), std::string::npos);
  EXPECT_EQ(raw.out.find("<Np>"), std::string::npos);
}

TEST_F(CliTest, MissingAndMalformedInputsAreDataErrors) {
  EXPECT_EQ(Cli({"ingest", Path("absent.jsonl")}).code, kExitData);
  EXPECT_EQ(Cli({"ingest", Data("bad.jsonl")}).code, kExitData);
  EXPECT_EQ(Cli({"ingest", Data("nolemma.xml")}).code, kExitData);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"ingest", Data("small.jsonl"), "--ngram", "4"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"ingest", Data("small.jsonl"), "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"robustness", "-m", "jackknife", "--synthetic"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, AttributeLeaveOneOutCsv) {
  Synth();
  const CliRun r = Cli({"attribute", "-c", Path("A0.jsonl"), "-c",
                     Path("A1.jsonl"), "-c", Path("A2.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("# command=attribute"), std::string::npos);
  EXPECT_NE(r.out.find("# gamma0=0.35"), std::string::npos);
  EXPECT_NE(r.out.find("# accuracy="), std::string::npos);
  const std::vector<std::string> body = Body(r.out);
  ASSERT_EQ(body.size(), 6u);  // header, 3 corpora, attribution, home
  const std::vector<std::string> head = Fields(body[0]);
  EXPECT_EQ(head.size(), 1u + 2u * 15u);
  EXPECT_EQ(head[2], head[1] + ":rejected");
  EXPECT_EQ(Fields(body[1])[0], "A0");
  EXPECT_EQ(Fields(body[4])[0], "attribution");
  EXPECT_EQ(Fields(body[5])[0], "home");
  for (std::size_t j = 1; j <= 3; ++j) {
    const std::vector<std::string> row = Fields(body[j]);
    for (std::size_t c = 2; c < row.size(); c += 2) {
      EXPECT_TRUE(row[c] == "true" || row[c] == "false") << row[c];
      EXPECT_EQ(row[c] == "true", std::stod(row[c - 1]) <= 0.05);
    }
  }
}

TEST_F(CliTest, AttributeMarksUnattributableQueries) {
  Synth();
  // A query from a fourth, unrelated author with a strong signal.
  const CliRun other = Cli({"synth", "--out-dir", Path("other"), "--docs", "5",
                         "--seed", "99", "--intensity", "6"});
  ASSERT_EQ(other.code, kExitOk) << other.err;
  const CliRun r = Cli({"attribute", "-c", Path("A0.jsonl"), "-c",
                     Path("A1.jsonl"), "-q", Path("other/A2.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Unattributable"), std::string::npos);
  EXPECT_EQ(r.out.find("\nhome"), std::string::npos);
}

TEST_F(CliTest, JsonFormat) {
  Synth();
  const CliRun r = Cli({"attribute", "-c", Path("A0.jsonl"), "-c",
                     Path("A1.jsonl"), "-c", Path("A2.jsonl"), "--format",
                     "json", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["seed"], 7);
  EXPECT_EQ(j["config"]["ngram"], 1);
  EXPECT_EQ(j["documents"].size(), 15u);
  EXPECT_EQ(j["summary"]["total"], 15);
  EXPECT_LE(j["summary"]["correct"].get<int>(),
            j["summary"]["attributable"].get<int>());
}

TEST_F(CliTest, DiscrepancyMatrix) {
  Synth();
  const CliRun r = Cli({"discrepancy", "-c", Path("A0.jsonl"), "-c",
                     Path("A1.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> body = Body(r.out);
  ASSERT_EQ(body.size(), 11u);
  EXPECT_EQ(body[0], "doc_id,home,A0,A1");
  EXPECT_EQ(Fields(body[1])[1], "A0");
  EXPECT_EQ(Fields(body[10])[1], "A1");
}

TEST_F(CliTest, ExplainIdenticalCorporaIsEmpty) {
  Synth();
  const CliRun r =
      Cli({"explain", "-a", Path("A0.jsonl"), "-b", Path("A0.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> body = Body(r.out);
  ASSERT_EQ(body.size(), 1u);
  EXPECT_EQ(body[0], "rank,feature,score,p_value,sign");
}

TEST_F(CliTest, ExplainFindsPlantedFeatures) {
  Synth("15");
  const CliRun r = Cli({"explain", "-a", Path("A0.jsonl"), "-b",
                     Path("A1.jsonl"), "-b", Path("A2.jsonl"), "--top-k", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> body = Body(r.out);
  ASSERT_GE(body.size(), 2u);
  EXPECT_LE(body.size(), 6u);

  SyntheticSuiteOptions o;
  o.docs = 15;
  o.seed = 3;
  std::set<std::string> planted;
  for (const SyntheticAuthorSpec &s : SyntheticAuthors(o)) {
    for (std::size_t f : s.perturbed_features) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "w%04zu", f);
      planted.insert(buf);
    }
  }
  const std::vector<std::string> top = Fields(body[1]);
  EXPECT_EQ(top[0], "1");
  EXPECT_TRUE(planted.count(top[1])) << top[1];
  const double score = std::stod(top[2]);
  EXPECT_EQ(score > 0, top[4] == "1");
}

TEST_F(CliTest, RobustnessIsDeterministic) {
  const std::vector<std::string> args{
      "robustness", "-m", "kfold",  "--synthetic", "--docs", "5",
      "--splits",   "3",  "--seed", "4"};
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> body = Body(a.out);
  ASSERT_EQ(body.size(), 4u);
  EXPECT_EQ(body[0], "trial,accuracy");
}

TEST_F(CliTest, RobustnessCurves) {
  const CliRun g = Cli({"robustness", "-m", "gamma", "--synthetic", "--docs",
                     "4", "--gammas", "0.2,0.4"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  std::vector<std::string> body = Body(g.out);
  ASSERT_EQ(body.size(), 3u);
  EXPECT_EQ(body[0], "gamma0,accuracy,accuracy_sd,stability");
  EXPECT_EQ(Fields(body[1]).back(), "1");

  const CliRun l = Cli({"robustness", "-m", "length", "--synthetic", "--docs",
                     "4", "--budgets", "2,100", "--trials", "2"});
  ASSERT_EQ(l.code, kExitOk) << l.err;
  body = Body(l.out);
  ASSERT_EQ(body.size(), 3u);
  EXPECT_EQ(body[0], "verses,accuracy,accuracy_sd,flagged");
  EXPECT_EQ(Fields(body[2]).back(), "24");
}

TEST_F(CliTest, RobustnessNeedsData) {
  EXPECT_EQ(Cli({"robustness", "-m", "kfold"}).code, kExitUsage);
}

}  // namespace
}  // namespace hcauthor
