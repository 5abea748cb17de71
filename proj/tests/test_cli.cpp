#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NEGDEP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(NEGDEP_DATA_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("negdep_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string build(const std::string& spec) {
    const std::string out = path(spec);
    EXPECT_EQ(run("build " + data(spec) + " -o " + out).code, 0);
    return out;
  }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_F(Cli, BuildWritesDistribution) {
  const auto r = run("build " + data("ex-3.3.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("dim"), 4);
  EXPECT_EQ(j.at("atoms").size(), 8u);
  EXPECT_EQ(j.at("atoms").at(0).at("p"), "1/8");
}

TEST_F(Cli, ExitCodesFollowVerdicts) {
  const auto dist = build("ex-3.3.json");
  EXPECT_EQ(run("check " + dist + " --props na,nsmd,nod,nrtd").code, 0);
  EXPECT_EQ(run("check " + dist + " --props nrd").code, 1);
  EXPECT_EQ(run("check " + dist).code, 1);
}

TEST_F(Cli, ReportContents) {
  const auto dist = build("ex-3.3.json");
  const auto r = run("check " + dist + " --props nltd,nrtd --max-j 1");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("options").at("max_j"), 1);
  ASSERT_EQ(j.at("verdicts").size(), 2u);
  EXPECT_FALSE(j.at("verdicts").at(0).at("holds").get<bool>());
  EXPECT_EQ(j.at("verdicts").at(0).at("witness").at("J"), nlohmann::json::array({1}));
  EXPECT_TRUE(j.at("verdicts").at(1).at("holds").get<bool>());
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_TRUE(nlohmann::json::parse(run("check " + dist + " --props na --timings").out).contains("timings_ms"));
}

TEST_F(Cli, ReportsIdenticalAcrossJobs) {
  const auto dist = build("ex-2.1.json");
  const auto a = run("check " + dist + " --props na,nsmd,nod,nrd,nltd,nrtd --jobs 1");
  const auto b = run("check " + dist + " --props na,nsmd,nod,nrd,nltd,nrtd --jobs 4");
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  const auto c = run("check " + dist + " --props na,nsmd,nod,nrd,nltd,nrtd --jobs 1 -o " + path("r.json"));
  EXPECT_EQ(slurp(path("r.json")), a.out);
  EXPECT_NE(c.out.find("NRD fails"), std::string::npos);
}

TEST_F(Cli, CapExceededIsAnError) {
  const auto dist = build("knockout-l3-fixed.json");
  const auto r = run("check " + dist + " --props nod,na --max-j 2 --caps upper_sets=10");
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("error"));
  EXPECT_NE(j.at("error").get<std::string>().find("EnumerationCapExceeded"), std::string::npos);
  EXPECT_EQ(j.at("verdicts").size(), 1u);
}

TEST_F(Cli, BadInputs) {
  EXPECT_EQ(run("check /nonexistent.json").code, 2);
  EXPECT_EQ(run("check " + data("ex-3.3.json")).code, 2);  // a model spec, not a distribution
  EXPECT_EQ(run("check").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  const auto dist = build("ex-3.3.json");
  EXPECT_EQ(run("check " + dist + " --props bogus").code, 2);
  EXPECT_EQ(run("check " + dist + " --variant sideways").code, 2);
}

TEST_F(Cli, Reproduce) {
  const auto r = run("reproduce ex-3.3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ex-3.3: PASS"), std::string::npos);
  EXPECT_EQ(run("reproduce nothing").code, 2);
}

TEST_F(Cli, Conjecture) {
  const auto r = run("conjecture -n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("HOLDS-ON-INSTANCE", 0), 0u);
  EXPECT_EQ(run("conjecture --values 1,2,3,4,5,6").code, 2);
}
