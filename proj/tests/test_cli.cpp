// Drives the built qrep binary; its path comes from the build system.
#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#ifndef QREP_CLI_PATH
#error "QREP_CLI_PATH must point at the qrep binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CliRun {
  int status = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

CliRun run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(QREP_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Exported : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("qrep_cli_gallery_" + std::to_string(getpid()));
    fs::remove_all(dir_);
    CliRun r = run("export-gallery --n 5 --field gf5 --out " + dir_.string());
    ASSERT_EQ(r.status, 0) << r.out;
  }
  static std::string file(const std::string& name) { return (dir_ / name).string(); }
  static fs::path dir_;
};

fs::path Exported::dir_;

}  // namespace

TEST(Cli, GalleryTubeReport) {
  CliRun r = run("gallery-tube --n 5 --field gf2 --format json");
  ASSERT_EQ(r.status, 0);
  Json j = r.json();
  EXPECT_EQ(j["verb"], "gallery-tube");
  EXPECT_EQ(j["field"], "GF(2)");
  EXPECT_EQ(j["results"]["rank"], 3);
  EXPECT_EQ(j["results"]["bricks"], Json::array({true, true, true}));
  EXPECT_EQ(j["passed"], true);
  for (const auto& v : j["results"]["tau_orbit"]) EXPECT_TRUE(v.contains("witness"));
}

TEST(Cli, ReportsCarrySchemaKeys) {
  Json j = run("dimvec --m @lambda5/E1 --format json").json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"verb", "inputs", "field", "results", "passed"}));
}

TEST(Cli, CorruptedTubeExitsOne) {
  CliRun r = run("gallery-tube --n 5 --field gf2 --corrupt 1 --format json");
  EXPECT_EQ(r.status, 1);
  Json j = r.json();
  EXPECT_EQ(j["results"]["bricks"][0], false);
  EXPECT_EQ(j["results"]["failures"][0], "E_1 is not a brick");
  EXPECT_EQ(run("gallery-short-cycle --n 5 --corrupt 2 --no-formulas").status, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("hom --m @lambda5/E1").status, 2);
  EXPECT_EQ(run("gallery-tube --n 3").status, 2);
  EXPECT_EQ(run("gallery-tube --n 5 --field gf4").status, 2);
  EXPECT_EQ(run("dimvec --m @lambda5/E9").status, 2);
  EXPECT_EQ(run("gallery-tube --n 5 --corrupt 7").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(Exported, HomBetweenExportedFiles) {
  CliRun r = run("hom --a " + file("lambda5.json") + " --m " + file("e1.json") + " --n " + file("e1star.json") +
              " --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["results"]["dimension"], 1);
}

TEST_F(Exported, FormulaOnExportedFiles) {
  CliRun r = run("formula --which i --x " + file("s3.json") + " --m " + file("e1.json") + " --n " + file("e1star.json") +
              " --format json");
  ASSERT_EQ(r.status, 0);
  Json res = r.json()["results"];
  EXPECT_EQ(res["status"], "holds");
  EXPECT_EQ(res["lhs"], res["rhs"]);
  EXPECT_EQ(res["lhs"], res["hom_x_m"].get<int>() - res["hom_m_tau_x"].get<int>());
}

TEST_F(Exported, HypothesisViolationExitsTwo) {
  CliRun r = run("formula --which ii --x " + file("s3.json") + " --m " + file("e1.json") + " --n " + file("e2.json") +
              " --format json");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.json()["results"]["status"], "hypothesis_violated");
}

TEST_F(Exported, MalformedFileNamesFileAndField) {
  std::ofstream(file("broken.json")) << R"({"algebra":"lambda5.json","dims":[0,0,1,1,0,0],"matrices":{"a3_4":[["x"]]}})";
  CliRun r = run("dimvec --m " + file("broken.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("broken.json"), std::string::npos);
  EXPECT_NE(r.out.find("matrices.a3_4[0][0]"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(Exported, InvalidRepresentationExitsOne) {
  std::ofstream(file("cycle.json")) << R"({"algebra":"lambda5.json","dims":[0,0,1,1,0,0],
      "matrices":{"a3_4":[["1"]],"b4_3":[["1"]]}})";
  CliRun r = run("rep-validate --m " + file("cycle.json") + " --format json");
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.json()["results"]["violations"].empty());
}

// Every verb gives the same results on exported files as on the in-memory
// gallery objects they came from.
TEST_F(Exported, FilesReproduceSelectorResults) {
  struct Case {
    std::string verb, selectors, files;
  };
  const std::string f = " --field gf5";
  std::vector<Case> cases{
      {"algebra-info", "--a @lambda5", "--a " + file("lambda5.json")},
      {"rep-validate", "--m @lambda5/E2", "--m " + file("e2.json")},
      {"dimvec", "--m @lambda5/E*3", "--m " + file("e3star.json")},
      {"hom", "--m @lambda5/P3 --n @lambda5/E1", "--m " + file("p3.json") + " --n " + file("e1.json")},
      {"ext1", "--m @lambda5/E1 --n @lambda5/E*1", "--m " + file("e1.json") + " --n " + file("e1star.json")},
      {"tau", "--m @lambda5/E2", "--m " + file("e2.json")},
      {"tau-minus", "--m @lambda5/I4", "--m " + file("i4.json")},
      {"tau", "--m @h5/E2", "--m " + file("h5_e2.json")},
      {"iso", "--m @lambda5/S2 --n @lambda5/S2", "--m " + file("s2.json") + " --n " + file("s2.json")},
      {"formula", "--x @lambda5/P1 --m @lambda5/E3 --n @lambda5/E*3",
       "--x " + file("p1.json") + " --m " + file("e3.json") + " --n " + file("e3star.json")},
  };
  for (const auto& c : cases) {
    CliRun a = run(c.verb + " " + c.selectors + f + " --format json");
    CliRun b = run(c.verb + " " + c.files + f + " --format json");
    ASSERT_EQ(a.status, b.status) << c.verb;
    EXPECT_EQ(a.json()["results"].dump(), b.json()["results"].dump()) << c.verb;
    // reloading again is byte-identical
    EXPECT_EQ(b.out, run(c.verb + " " + c.files + f + " --format json").out) << c.verb;
  }
}

TEST(Cli, SeededRunsAreByteIdentical) {
  const std::string cmd = "iso --m @h6/E1 --n @h6/E1 --seed 17 --format json";
  CliRun a = run(cmd);
  CliRun b = run(cmd);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("gallery-short-cycle --n 4 --field q --format json").out,
            run("gallery-short-cycle --n 4 --field q --format json").out);
}

TEST(Cli, TextReportWritesToOutFile) {
  fs::path out = fs::temp_directory_path() / "qrep_cli_report.txt";
  fs::remove(out);
  CliRun r = run("hom --m @lambda5/E1 --n @lambda5/E*1 --out " + out.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("dimension: 1"), std::string::npos);
  EXPECT_NE(text.find("passed: yes"), std::string::npos);
}
