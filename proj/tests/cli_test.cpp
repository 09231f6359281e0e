#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HORADAM_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliTerm, Examples) {
  EXPECT_EQ(run("term --preset fibonacci -n 0").out, "0 1 1 2 3 5 8 13\n");
  EXPECT_EQ(run("term -a 2 -b 2 -p 2 -q 1 -n 0").out, "2 2 6 14 34 82 198 478\n");
  EXPECT_EQ(run("term -a -2 -b 2 -p -1 -q 1 -n 3").out, "6 -10 16 -26 42 -68 110 -178\n");
}

TEST(CliTerm, UsageErrors) {
  EXPECT_EQ(run("term --preset nosuch -n 0").exit_code, 2);
  EXPECT_EQ(run("term -a 1 -b 2 -n 0").exit_code, 2);
  EXPECT_EQ(run("term -a x -b 2 -p 1 -q 1 -n 0").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST(CliVerify, SinglePointAndExitCode) {
  const RunResult r = run("verify --preset fibonacci --identities binet --n-max 10");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("summary points=1 degenerate_points=0 equal=11 mismatch=0"), std::string::npos);
  EXPECT_EQ(run("verify --identities nope").exit_code, 2);
  EXPECT_EQ(run("verify --p-range 3:1").exit_code, 2);
}

TEST(CliVerify, PoleRestrictedGrid) {
  const RunResult r = run("verify -p 0 -q 1 --identities sum --n-max 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("equal=0 mismatch=0 skipped=125 skipped_degenerate=0 skipped_pole=125"),
            std::string::npos)
      << r.out.substr(r.out.rfind("summary"));
}

TEST(CliVerify, OutFileAndIoError) {
  const auto path = std::filesystem::temp_directory_path() / "horadam_cli_test_report.txt";
  EXPECT_EQ(run("verify --preset pell --n-max 3 --out " + path.string()).exit_code, 0);
  const std::string text = slurp(path);
  EXPECT_NE(text.find("identity=w_sum a=0 b=1 p=2 q=1 n=3"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify --preset pell --out /nonexistent-dir/x.txt").exit_code, 3);
  EXPECT_EQ(run("emit-table --out /nonexistent-dir/x.txt").exit_code, 3);
}

TEST(CliEmitTable, Deterministic) {
  const RunResult first = run("emit-table");
  const RunResult second = run("emit-table");
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(std::count(first.out.begin(), first.out.end(), '\n'), 64);
  EXPECT_EQ(first.out.substr(0, 18), "0 0 +1 0\n0 1 +1 1\n");
}

}  // namespace
