#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string command = std::string(CARTAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cartan_cli_test_" + name);
}

}  // namespace

TEST(Cli, EvalPrintsCanonicalResult) {
  const Outcome r = run("eval --fixture euclid3 'delta(x*dx)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run("eval --fixture euclid2 'sn(x*dy, dx)'").out, "-dy\n");
}

TEST(Cli, EvalBindings) {
  const Outcome r = run("eval --let 'f=x^2*y' --let 'w=f*dz' 'd(w)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2*x*y*dx^dz + x^2*dy^dz\n");

  const auto path = temp_path("lets.json");
  std::ofstream(path) << R"({"a": "x*dy", "b": "dx"})";
  const Outcome f = run("eval --fixture euclid2 --let-file " + path.string() + " 'sn(a, b)'");
  EXPECT_EQ(f.status, 0);
  EXPECT_EQ(f.out, "-dy\n");
  std::filesystem::remove(path);
}

TEST(Cli, EvalErrorsExitOne) {
  EXPECT_EQ(run("eval 'wedge(dx)'").status, 1);
  EXPECT_EQ(run("eval 'q + 1'").status, 1);
  EXPECT_EQ(run("eval --fixture nosuch 'x'").status, 1);
}

TEST(Cli, CheckPasses) {
  const Outcome r = run("check --fixture euclid3 --filter 'eq20*' --seed 42 --trials 100");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CheckUsageErrors) {
  EXPECT_EQ(run("check --fixture nosuch").status, 1);
  EXPECT_EQ(run("check --fixture euclid3 --filter 'zzz*'").status, 1);
  EXPECT_EQ(run("check --bogus").status, 1);
  EXPECT_EQ(run("check --report xml").status, 1);
  EXPECT_EQ(run("").status, 1);
}

TEST(Cli, JsonReportIsByteIdentical) {
  const auto a = temp_path("a.json"), b = temp_path("b.json");
  const std::string args = "check --fixture euclid2 --fixture conf3 --filter 'eq4*' --trials 5 --report json --no-timing --out ";
  EXPECT_EQ(run(args + a.string()).status, 0);
  EXPECT_EQ(run(args + b.string()).status, 0);
  const std::string ja = slurp(a);
  EXPECT_FALSE(ja.empty());
  EXPECT_EQ(ja, slurp(b));
  EXPECT_NE(ja.find("\"check_id\""), std::string::npos);
  EXPECT_EQ(ja.find("millis"), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, Listings) {
  const Outcome f = run("fixtures list");
  EXPECT_EQ(f.status, 0);
  for (const char* name : {"euclid2", "euclid3", "mink4", "conf3"}) EXPECT_NE(f.out.find(name), std::string::npos);
  const Outcome i = run("identities list");
  EXPECT_EQ(i.status, 0);
  EXPECT_NE(i.out.find("eq45_d_j"), std::string::npos);
}
