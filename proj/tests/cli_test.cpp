// Copyright 2026 The EML Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cache.hpp"
#include "cli.hpp"
#include "gtest/gtest.h"
#include "record.hpp"

namespace eml::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result Call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = Run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Timing is the only field allowed to differ between runs.
std::string WithoutTiming(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timing");
  return j.dump();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("eml_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(CliInvariantsTest, CompleteGraph) {
  const Result r = Call({"invariants"}, "C~\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json g = r.json()["outputs"]["graphs"][0];
  EXPECT_EQ(g["triple"]["p"], 1);
  EXPECT_EQ(g["triple"]["q"], 2);
  EXPECT_EQ(g["triple"]["r"], 2);
}

TEST(CliInvariantsTest, MalformedLineIsReportedAndSkipped) {
  const Result r = Call({"invariants"}, "C~\nbad\nA_\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json graphs = r.json()["outputs"]["graphs"];
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_FALSE(graphs[0].contains("error"));
  EXPECT_EQ(graphs[1]["line"], 2);
  EXPECT_TRUE(graphs[1].contains("error"));
  EXPECT_FALSE(graphs[2].contains("error"));
  EXPECT_EQ(r.json()["outputs"]["summary"]["errors"], 1);
}

TEST(CliInvariantsTest, EmptyInput) {
  const Result r = Call({"invariants"}, "");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.json()["outputs"]["graphs"].empty());
}

TEST(CliInvariantsTest, ReadsFile) {
  TempDir dir;
  const fs::path file = dir.path() / "in.g6";
  std::ofstream(file) << "D~{\n";
  const Result r = Call({"invariants", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["outputs"]["graphs"][0]["n"], 5);
  EXPECT_EQ(Call({"invariants", (dir.path() / "missing").string()}).code,
            kExitUsage);
}

TEST(CliInvariantsTest, BudgetExhaustion) {
  const Result r = Call({"--budget-nodes", "1", "invariants"},
                        "O~~~~~~~~~~~~~~~~~~~~\n");
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_TRUE(r.json()["outputs"]["graphs"][0].contains("error"));
}

TEST(CliConstructTest, FirstTreeFamily) {
  const Result r = Call({"construct", "g1", "q=3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json o = r.json()["outputs"];
  EXPECT_EQ(o["n"], 8);
  EXPECT_EQ(o["m"], 7);
  EXPECT_EQ(o["solver"], (Json{{"p", 3}, {"q", 3}, {"r", 4}}));
  EXPECT_TRUE(o["agrees"].get<bool>());
}

TEST(CliConstructTest, StarJoinWitness) {
  const Result r = Call({"construct", "thm34-1", "p=2", "q=3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["outputs"]["m"], 7);
}

TEST(CliConstructTest, RangeError) {
  const Result r = Call({"construct", "g5", "q=3", "r=5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("r <= 2q-2"), std::string::npos) << r.err;
}

TEST(CliConstructTest, UnknownFamilyAndParameters) {
  EXPECT_EQ(Call({"construct", "petersen"}).code, kExitUsage);
  EXPECT_EQ(Call({"construct", "Kn", "n=4", "m=2"}).code, kExitUsage);
  EXPECT_EQ(Call({"construct", "Kn"}).code, kExitUsage);
  EXPECT_EQ(Call({"construct", "Kn", "n=x"}).code, kExitUsage);
}

TEST(CliComposeTest, PartsAndHypotheses) {
  const Result ok = Call({"compose", "Cr@0:b", "Cr@1:b"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.json()["outputs"]["predicted"],
            (Json{{"p", 2}, {"q", 4}, {"r", 4}}));
  const Result bad = Call({"compose", "Bw@0:a", "A_@0:a"});
  ASSERT_EQ(bad.code, kExitOk) << bad.err;
  EXPECT_FALSE(bad.json()["outputs"]["min_hypotheses"].get<bool>());
  EXPECT_TRUE(bad.json()["outputs"]["predicted"].is_null());
  EXPECT_EQ(Call({"compose", "A_@0:c", "A_@0:a"}).code, kExitUsage);
  EXPECT_EQ(Call({"compose", "A_@0:a"}).code, kExitUsage);
}

TEST(CliSearchTest, Examples) {
  const Result v = Call({"search", "minv", "2", "2", "3"});
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(v.json()["outputs"]["value"], 6);
  const Result e = Call({"search", "mine", "3", "3", "3"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(e.json()["outputs"]["value"], 6);
  EXPECT_EQ(e.json()["outputs"]["status"], "certified");
}

TEST(CliSearchTest, InvalidTriple) {
  const Result r = Call({"search", "minv", "1", "2", "5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("r <= 2q"), std::string::npos);
  EXPECT_EQ(Call({"search", "maxv", "1", "1", "1"}).code, kExitUsage);
}

TEST(CliSearchTest, SmallBudgetIsInconclusiveNotFailure) {
  const Result r = Call({"search", "minv", "2", "2", "3", "--n-budget", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.json()["outputs"]["status"], "inconclusive");
}

TEST(CliVerifyTest, NotPerfectlyMatchable) {
  const Result r = Call({"verify", "notpm", "--nmax", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json s = r.json()["outputs"]["summary"];
  EXPECT_EQ(s["failed"], 0);
  EXPECT_GT(s["passed"].get<int>(), 0);
  EXPECT_EQ(Call({"verify", "everything"}).code, kExitUsage);
}

TEST(CliTreesTest, Orders) {
  const Result r = Call({"trees", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json o = r.json()["outputs"];
  EXPECT_EQ(o["orders"][6]["trees"], 11);
  EXPECT_TRUE(o["counterexample"].is_null());
}

TEST(CliFormatTest, CsvAndText) {
  const Result csv = Call({"--format", "csv", "census", "4"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,p,q,r,count,min_edges");
  const Result text = Call({"--format", "text", "census", "4"});
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_EQ(text.out.rfind("# eml census 4", 0), 0u);
  EXPECT_EQ(Call({"--format", "xml", "census", "4"}).code, kExitUsage);
}

TEST(CliFormatTest, EnvironmentOverride) {
  ::setenv("EML_FORMAT", "csv", 1);
  const Result r = Call({"census", "3"});
  ::unsetenv("EML_FORMAT");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("n,p,q,r", 0), 0u);
  ::setenv("EML_WITNESSES", "0", 1);
  const Result w = Call({"census", "4"});
  ::unsetenv("EML_WITNESSES");
  EXPECT_TRUE(w.json()["outputs"]["rows"][0]["witnesses"].empty());
}

TEST(CliRecordTest, SchemaAndDeterminism) {
  const Result a = Call({"--workers", "1", "census", "6"});
  const Result b = Call({"--workers", "3", "census", "6"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(WithoutTiming(a.out), WithoutTiming(b.out));
  const Json j = a.json();
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["command"]["name"], "census");
  for (const char* key : {"inputs", "outputs", "provenance", "timing"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(ResultRecord::from_json(j).to_json(), j);
}

TEST(CliUsageTest, Errors) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"--workers", "0", "census", "3"}).code, kExitUsage);
  EXPECT_EQ(Call({"--budget-nodes", "0", "census", "3"}).code, kExitUsage);
  EXPECT_EQ(Call({"census", "11"}).code, kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

TEST(CliCacheTest, HitServesIdenticalBytes) {
  TempDir dir;
  const std::string cache = dir.path().string();
  const Result first = Call({"--cache", cache, "census", "7"});
  ASSERT_EQ(first.code, kExitOk);
  const Result second = Call({"--cache", cache, "--workers", "4", "census", "7"});
  EXPECT_EQ(second.out, first.out);
  const Result fresh = Call({"census", "7"});
  EXPECT_EQ(WithoutTiming(fresh.out), WithoutTiming(first.out));
  EXPECT_NE(fresh.out, first.out);
}

TEST(CliCacheTest, CorruptEntryIsRecomputed) {
  TempDir dir;
  const std::string cache = dir.path().string();
  const Result first = Call({"--cache", cache, "census", "5"});
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    std::ofstream(entry.path()) << "{not json";
    ++files;
  }
  ASSERT_EQ(files, 1);
  const Result again = Call({"--cache", cache, "census", "5"});
  EXPECT_EQ(again.code, kExitOk);
  EXPECT_NE(again.err.find("warning"), std::string::npos);
  EXPECT_EQ(WithoutTiming(again.out), WithoutTiming(first.out));
}

TEST(CliCacheTest, VersionMismatchMisses) {
  TempDir dir;
  ResultCache old(dir.path(), "0.0.1", nullptr);
  ResultRecord record;
  record.command = "census";
  record.arguments = {"5", "witnesses=1"};
  record.outputs["rows"] = Json::array();
  old.put("census 5 witnesses=1", record);
  EXPECT_TRUE(old.get("census 5 witnesses=1").has_value());
  ResultCache current(dir.path(), kCodeVersion, nullptr);
  EXPECT_FALSE(current.get("census 5 witnesses=1").has_value());
  const Result r = Call({"--cache", dir.path().string(), "census", "5"});
  EXPECT_FALSE(r.json()["outputs"]["rows"].empty());
}

TEST(CliCacheTest, ExitCodeSurvivesCaching) {
  TempDir dir;
  const std::string cache = dir.path().string();
  const Result a = Call({"--cache", cache, "search", "minv", "2", "2", "3",
                         "--n-budget", "5"});
  const Result b = Call({"--cache", cache, "search", "minv", "2", "2", "3",
                         "--n-budget", "5"});
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace eml::cli
