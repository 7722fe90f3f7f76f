#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = TWOMODE_CLI_PATH;
const std::string kData = TWOMODE_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(CliTest, AnalyzeFormats) {
  const auto csv = run("analyze " + kData + "/fig1.tsv --part right --format csv --precision 4");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("label,part,W,C,C1\nL2,right,9,0.1111,0.2000\n", 0), 0u);
  const auto json = run("analyze " + kData + "/davis.tsv --part left --format json");
  EXPECT_EQ(json.code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["nodes"].size(), 18u);
  EXPECT_EQ(doc["nodes"][0]["C1_dec"], "0.07779");
  const auto table = run("analyze " + kData + "/davis.tsv --part right");
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("September 16th"), std::string::npos);
  EXPECT_EQ(table.out, run("analyze " + kData + "/davis.tsv --part right").out);
}

TEST(CliTest, ValidationErrorsExitOne) {
  EXPECT_EQ(run("analyze " + kData + "/missing.tsv --part left").code, 1);
  EXPECT_EQ(run("analyze " + kData + "/fig1.tsv --part middle").code, 1);
  EXPECT_EQ(run("verify trees 7 6").code, 1);
  EXPECT_EQ(run("closed-form 0 3").code, 1);
  EXPECT_EQ(run("bound 0").code, 1);
  EXPECT_EQ(run("nonsense").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST(CliTest, NumericCommands) {
  const auto cf = run("closed-form 14 18");
  EXPECT_EQ(cf.code, 0);
  EXPECT_NE(cf.out.find("C1: 163883/498168"), std::string::npos);
  EXPECT_NE(cf.out.find("reduced_form_agrees: yes"), std::string::npos);
  const auto b = run("bound 3");
  EXPECT_NE(b.out.find("lower_bound: 1/5"), std::string::npos);
  const auto ex = run("extremal 1 1");
  EXPECT_NE(ex.out.find("0\t1\n"), std::string::npos);
}

TEST(CliTest, VerifyAndScan) {
  const auto v = run("verify trees 3 2");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("verdict: match"), std::string::npos);
  EXPECT_EQ(run("verify graphs 2 2 --jobs 3").code, 0);
  EXPECT_NE(run("verify star 4").out.find("best: 2/5"), std::string::npos);
  const auto scan = run("scan-eigenvector 3 2");
  EXPECT_EQ(scan.code, 0);
  EXPECT_NE(scan.out.find("normalization: sum=1"), std::string::npos);
}

TEST(CliTest, TransformReport) {
  const std::string path = ::testing::TempDir() + "twomode_chain.tsv";
  FILE* f = std::fopen(path.c_str(), "w");
  ASSERT_NE(f, nullptr);
  std::fputs("u\tz\nu\tw\np\tz\np\ty\n", f);
  std::fclose(f);
  const auto r = run("transform " + path + " --root u");
  std::remove(path.c_str());
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["context"]["z"], "z");
  EXPECT_EQ(doc["context"]["Y"], nlohmann::json::array({"y"}));
  EXPECT_EQ(doc["audit"]["c1_after_dec"], "0.272222");
  EXPECT_EQ(doc["audit"]["relative_drop_clause"]["status"], "precondition unmet");
  EXPECT_EQ(doc["after"].size(), 4u);
}

TEST(CliTest, EmitWritesFile) {
  const std::string path = ::testing::TempDir() + "twomode_h.tsv";
  EXPECT_EQ(run("extremal 18 14 --emit " + path).code, 0);
  const auto a = run("analyze " + path + " --part left --format csv --precision 12");
  std::remove(path.c_str());
  EXPECT_EQ(a.out.rfind("label,part,W,C,C1\n0,left,", 0), 0u);
}

}  // namespace
