#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"

using namespace envelope::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("envelope_cli_" + name);
}

}  // namespace

TEST(Config, ParsesKeyValueAndComments) {
  std::istringstream in("# header\nsystem = baryon\nN=3   # trailing\n\nk = 0.2\n");
  const Config cfg = Config::parse(in, "test.cfg");
  EXPECT_EQ(cfg.text("system"), "baryon");
  EXPECT_EQ(cfg.integer("N"), 3);
  EXPECT_DOUBLE_EQ(*cfg.number("k"), 0.2);
  EXPECT_FALSE(cfg.has("g"));
}

TEST(Config, DiagnosticsNameLineAndKey) {
  std::istringstream bad_line("system = baryon\nthis line has no equals\n");
  try {
    Config::parse(bad_line, "a.cfg");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("a.cfg:2"), std::string::npos) << e.what();
  }
  std::istringstream bad_value("system = baryon\nN = three\n");
  const Config cfg = Config::parse(bad_value, "b.cfg");
  try {
    (void)cfg.integer("N");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("b.cfg:2"), std::string::npos) << what;
    EXPECT_NE(what.find("`N`"), std::string::npos) << what;
  }
  std::istringstream unknown("sytem = baryon\n");
  EXPECT_THROW(Config::parse(unknown, "c.cfg").require_known_keys(), ConfigError);
}

TEST(Cli, SolveBaryonDos) {
  const auto r = invoke({"solve", "system=baryon", "N=3", "k=0.2", "alpha_s=0.4", "nu=1",
                         "lambda=1", "phi=dos"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E:         1.94455"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bound:     none"), std::string::npos) << r.out;
}

TEST(Cli, SolveHarmonicAtQ) {
  const auto r = invoke({"solve", "system=powerlaw2", "b=2", "m=1", "a=1", "N=2", "--q", "1.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E:         3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bound:     upper"), std::string::npos) << r.out;
}

TEST(Cli, ShallowGaussianExitsThree) {
  const auto r = invoke({"solve", "system=gaussian", "V0=1e-3"});
  EXPECT_EQ(r.code, kExitSolver);
  EXPECT_NE(r.err.find("NoBoundState"), std::string::npos) << r.err;
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(invoke({"solve", "system=nothing"}).code, kExitConfig);
  EXPECT_EQ(invoke({"solve", "system=baryon", "N=x"}).code, kExitConfig);
  EXPECT_EQ(invoke({"solve", "system=baryon", "colour=red"}).code, kExitConfig);
  EXPECT_EQ(invoke({"solve", "--config", "/nonexistent/envelope.cfg"}).code, kExitConfig);
  EXPECT_EQ(invoke({"bogus"}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan", "system=baryon", "--axis", "colour", "--start", "1", "--stop", "2",
                    "--count", "2"})
                .code,
            kExitConfig);
}

TEST(Cli, FlagsOverrideConfigFile) {
  const auto path = scratch("override.cfg");
  {
    std::ofstream f(path);
    f << "system = powerlaw2\nb = 2\nq = 7\n";
  }
  const auto r = invoke({"solve", "--config", path.string(), "--q", "1.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Q_used:    1.5\n"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, Table1Footers) {
  const auto two = invoke({"table1", "--phi", "2"});
  ASSERT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("15.1%"), std::string::npos) << two.out;
  const auto dos = invoke({"table1", "--phi", "dos"});
  EXPECT_NE(dos.out.find("4.7%"), std::string::npos) << dos.out;
}

TEST(Cli, Table1CsvIsLongFormat) {
  const auto path = scratch("table1.csv");
  ASSERT_EQ(invoke({"table1", "--phi", "all", "--csv", path.string()}).code, 0);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.rfind("n_sum,l_sum,exact,E,phi_used\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4 * 16);
  std::filesystem::remove(path);
}

TEST(Cli, ScanConfinedOverN) {
  const auto r = invoke({"scan", "system=confined", "omega=0.5", "g=1", "--axis", "N", "--start",
                         "2", "--stop", "8", "--count", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,nu,lambda,E_phi2,phi_dos,E_dos");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
  }
  EXPECT_EQ(rows, 7);
  EXPECT_NE(r.out.find("2,0.5,0.5,1.13378735435,"), std::string::npos) << r.out;
}

TEST(Cli, ScanRejectsFractionalIntegerAxis) {
  EXPECT_EQ(invoke({"scan", "system=confined", "--axis", "N", "--start", "2", "--stop", "3",
                    "--count", "3"})
                .code,
            kExitConfig);
}

TEST(Cli, ScanBsqDelta) {
  const auto r = invoke({"scan", "system=powerlaw2", "--axis", "b", "--start", "0.01", "--stop",
                         "2.5", "--count", "250", "--emit", "delta"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "b,c1,c2,delta");
  double worst = 0.0;
  while (std::getline(lines, line)) {
    worst = std::max(worst, std::stod(line.substr(line.rfind(',') + 1)));
  }
  EXPECT_LE(worst, 0.016);
}

TEST(Cli, ScanBaryonPhi) {
  const auto r = invoke({"scan", "system=baryon", "--axis", "lambda", "--start", "1", "--stop",
                         "20", "--count", "20", "--emit", "phi"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "lambda,lambda,phi_dos,phi_closed");
  double prev = 0.0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i < 3; ++i) {
      std::getline(cells, cell, ',');
    }
    const double phi = std::stod(cell);
    EXPECT_GT(phi, prev);
    prev = phi;
  }
  EXPECT_LT(prev, std::sqrt(2.0));
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
