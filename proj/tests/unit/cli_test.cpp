#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace haga::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Classify) {
  EXPECT_EQ(call({"classify", "--d", "2", "--e", "1"}).out, "h5\n");
  EXPECT_EQ(call({"classify", "--d", "2", "--e", "-1/2"}).out, "h7\n");
  EXPECT_EQ(call({"classify", "--d", "1", "--e", "2"}).out, "h2\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"classify", "--d", "0", "--e", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"classify", "--d", "1", "--e", "0.5"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--d", "-1", "--e", "0"}).code, kExitUsage);
  EXPECT_EQ(call({"sweep", "--d", "1", "--e-from", "0", "--e-to", "1", "--steps", "0"}).code,
            kExitUsage);
  EXPECT_EQ(call({"figure", "--d", "2", "--e", "1", "--circles", "zeta"}).code, kExitUsage);
  EXPECT_EQ(call({"figure", "--paper-figure", "999"}).code, kExitUsage);
  const Result squares = call({"construct-squares", "--legs", "1,1"});
  EXPECT_EQ(squares.code, kExitUsage);
  EXPECT_NE(squares.err.find("NotASquare"), std::string::npos);
}

TEST(Cli, VerifyWithOracle) {
  const Result r = call({"verify", "--d", "2", "--e", "1", "--oracle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("16 checks: 16 pass"), std::string::npos) << r.out;
  const Result h2 = call({"verify", "--d", "1", "--e", "2", "--oracle"});
  EXPECT_EQ(h2.code, kExitOk);
}

TEST(Cli, VerifyJsonToStdout) {
  const Result r = call({"verify", "--d", "1", "--e", "3", "--json", "-"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"case\": \"h1\""), std::string::npos);
}

TEST(Cli, SweepListAndGrid) {
  const Result list = call({"sweep", "--d", "1", "--e-list", "-3,-1/2,0,1/3,1,3/2,2,5/2"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("coverage: h1 h2 h3 h4 h5 h6 h7"), std::string::npos) << list.out;
  const Result grid = call({"sweep", "--d", "1", "--e-from", "-1", "--e-to", "3", "--steps", "8"});
  EXPECT_EQ(grid.code, kExitOk);
  EXPECT_NE(grid.out.find("9 configurations, 0 with failures"), std::string::npos) << grid.out;
}

TEST(Cli, BuildJson) {
  const Result r = call({"build", "--d", "2", "--e", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"case\": \"h5\""), std::string::npos);
}

TEST(Cli, ConstructSquares) {
  const Result r = call({"construct-squares", "--legs", "3,4", "--json", "-"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  for (const char* d : {"\"d\": \"1\"", "\"d\": \"2\"", "\"d\": \"3\"", "\"d\": \"6\""}) {
    EXPECT_NE(r.out.find(d), std::string::npos) << d;
  }
}

TEST(Cli, FigureFilesAreIdentical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "haga_cli_test_a.svg").string();
  const auto b = (dir / "haga_cli_test_b.svg").string();
  ASSERT_EQ(call({"figure", "--paper-figure", "h3", "--out", a}).code, kExitOk);
  ASSERT_EQ(call({"figure", "--paper-figure", "h3", "--out", b}).code, kExitOk);
  const auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("<svg"), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  EXPECT_EQ(call({"figure", "--list-presets"}).code, kExitOk);
}

TEST(Cli, MoreExamples) {
  const Result h2 = call({"sweep", "--d", "1", "--e-list", "2"});
  EXPECT_EQ(h2.code, kExitOk);
  EXPECT_NE(h2.out.find("coverage: h2\n"), std::string::npos) << h2.out;
  EXPECT_EQ(call({"figure", "--d", "1", "--e", "3", "--circles", "nosuch"}).code, kExitUsage);
  const Result legs = call({"construct-squares", "--legs", "5,12"});
  EXPECT_EQ(legs.code, kExitOk);
  std::size_t trips = 0;
  for (std::size_t pos = 0; (pos = legs.out.find("\"round_trip\": true", pos)) != std::string::npos;
       ++pos) {
    ++trips;
  }
  EXPECT_EQ(trips, 4u);
}

}  // namespace
}  // namespace haga::cli
