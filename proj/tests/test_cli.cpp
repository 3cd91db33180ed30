#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "gaussclone/cli.hpp"

using namespace gaussclone::cli;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int count_fields(const std::string& line) {
  int fields = 1;
  for (char c : line) {
    if (c == ',') ++fields;
  }
  return fields;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the installed command line binary through the shell, capturing both
// streams.
CliRun run_cli(const std::string& args) {
  CliRun result;
  const std::string err_path =
      "/tmp/gaussclone_cli_err_" + std::to_string(::getpid()) + ".txt";
  const std::string command =
      std::string(GAUSSCLONE_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err_file(err_path);
  std::ostringstream err;
  err << err_file.rdbuf();
  result.err = err.str();
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format_double uses a point separator and honors precision") {
  CHECK(format_double(0.5, 12) == "0.5");
  CHECK(format_double(-3.0, 12) == "-3");
  CHECK(format_double(2.0 / 3.0, 6) == "0.666667");
  CHECK(format_double(2.0 / 3.0, 12) == "0.666666666667");
  CHECK(format_double(1e-30, 8).find('e') != std::string::npos);
  for (char c : format_double(12345.678, 12)) CHECK(c != ',');
}

TEST_CASE("fbar command emits the documented grid") {
  RunConfig config;
  config.sigma_min = 0.0;
  config.sigma_max = 2.0;
  config.steps = 5;
  std::ostringstream csv, log;
  CHECK(cmd_fbar(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "sigma,optimal_G,fbar_closed,fbar_numeric,abs_diff");
  for (const std::string& line : lines) CHECK(count_fields(line) == 5);

  // sigma = 0 keeps a perfect clone: optimal gain 1, fidelity 1.
  CHECK(lines[1].rfind("0,1,1,", 0) == 0);

  // Byte-identical on a repeated run.
  std::ostringstream again;
  std::ostringstream log2;
  CHECK(cmd_fbar(config, again, log2) == kExitSuccess);
  CHECK(csv.str() == again.str());
}

TEST_CASE("fbar command rejects bad grids and precisions") {
  std::ostringstream csv, log;
  RunConfig backwards;
  backwards.sigma_min = 2.0;
  backwards.sigma_max = 1.0;
  CHECK(cmd_fbar(backwards, csv, log) == kExitUsageError);

  RunConfig negative;
  negative.sigma_min = -1.0;
  CHECK(cmd_fbar(negative, csv, log) == kExitUsageError);

  RunConfig one_step;
  one_step.steps = 1;
  CHECK(cmd_fbar(one_step, csv, log) == kExitUsageError);

  RunConfig coarse;
  coarse.precision = 3;
  CHECK(cmd_fbar(coarse, csv, log) == kExitUsageError);
  RunConfig absurd;
  absurd.precision = 30;
  CHECK(cmd_fbar(absurd, csv, log) == kExitUsageError);
}

TEST_CASE("noclone command handles the zero-width edge") {
  RunConfig config;
  config.sigma_min = 0.0;
  config.sigma_max = 4.0;
  config.steps = 9;
  std::ostringstream csv, log;
  CHECK(cmd_noclone(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "sigma,lambda_closed,lambda_bisect,squeezing_dB,variance_dB");
  // sigma = 0: lambda = 1/sqrt(2) ~ 0.7071, variance_dB = -inf.
  CHECK(lines[1].rfind("0,0.70710678", 0) == 0);
  CHECK(lines[1].find("-inf") != std::string::npos);
  for (const std::string& line : lines) CHECK(count_fields(line) == 5);
}

TEST_CASE("tele command reports the crossing") {
  RunConfig config;
  config.sigma_min = 0.5;
  config.sigma_max = 4.0;
  config.steps = 8;
  config.lambda = 0.5;
  std::ostringstream csv, log;
  CHECK(cmd_tele(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "sigma,tele_F,noclone_F,above");
  bool saw_below = false;
  bool saw_above = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    CHECK(count_fields(line) == 4);
    if (line.back() == '0') saw_below = true;
    if (line.back() == '1') {
      saw_above = true;
      // Once the ensemble is broad enough, teleportation stays ahead.
      CHECK(saw_below);
    }
  }
  CHECK(saw_below);
  CHECK(saw_above);

  RunConfig bad = config;
  bad.lambda = 1.0;
  std::ostringstream csv2, log2;
  CHECK(cmd_tele(bad, csv2, log2) == kExitUsageError);
}

TEST_CASE("singlequad command splits data from summary") {
  RunConfig config;
  config.steps = 7;
  std::ostringstream csv, log;
  CHECK(cmd_singlequad(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "v_plus,fidelity,snr_plus,duan_value,sum_snr");
  for (const std::string& line : lines) CHECK(count_fields(line) == 5);
  CHECK(csv.str().find("optimal v_plus") == std::string::npos);

  const std::string summary = log.str();
  CHECK(summary.find("optimal v_plus = 1.264911064") != std::string::npos);
  CHECK(summary.find("F_max = 0.961012293") != std::string::npos);
  CHECK(summary.find("H = 1.125") != std::string::npos);
}

TEST_CASE("singlequad honors its squeezing grid edges") {
  RunConfig config;
  config.v_min = 0.5;
  config.v_max = 2.0;
  config.steps = 3;
  std::ostringstream csv, log;
  CHECK(cmd_singlequad(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[1].substr(0, lines[1].find(',')) == "0.5");
  CHECK(lines[2].substr(0, lines[2].find(',')) == "1");  // geometric midpoint
  CHECK(lines[3].substr(0, lines[3].find(',')) == "2");

  // The grid is logarithmic, so a nonpositive lower edge is a usage error.
  config.v_min = 0.0;
  std::ostringstream bad_csv, bad_log;
  CHECK(cmd_singlequad(config, bad_csv, bad_log) == kExitUsageError);
}

TEST_CASE("estimate command stays within its error bars") {
  RunConfig config;
  config.sigma_min = 0.2;
  config.sigma_max = 2.0;
  config.steps = 4;
  config.samples = 20000;
  config.seed = 9;
  std::ostringstream csv, log;
  CHECK(cmd_estimate(config, csv, log) == kExitSuccess);

  const auto lines = split_lines(csv.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "sigma,mse_bayes,mse_naive,mse_theory,z_score");
  for (const std::string& line : lines) CHECK(count_fields(line) == 5);

  RunConfig thin = config;
  thin.samples = 999;
  std::ostringstream csv2, log2;
  CHECK(cmd_estimate(thin, csv2, log2) == kExitUsageError);
}

TEST_CASE("binary runs end to end") {
  const CliRun ok = run_cli("fbar --sigma-min 0 --sigma-max 2 --steps 5");
  CHECK(ok.exit_code == 0);
  CHECK(split_lines(ok.out).size() == 6);
  CHECK(ok.out.rfind("sigma,optimal_G", 0) == 0);

  const CliRun repeat = run_cli("fbar --sigma-min 0 --sigma-max 2 --steps 5");
  CHECK(repeat.out == ok.out);

  // The singlequad summary goes to stderr so the CSV stays machine readable.
  const CliRun quad = run_cli("singlequad --steps 5");
  CHECK(quad.exit_code == 0);
  CHECK(quad.out.find("optimal v_plus") == std::string::npos);
  CHECK(quad.err.find("optimal v_plus") != std::string::npos);

  const CliRun redirected =
      run_cli("singlequad --steps 5 --out /tmp/gaussclone_quad_" +
              std::to_string(::getpid()) + ".csv");
  CHECK(redirected.exit_code == 0);
  // With --out, the summary moves to stdout and the CSV lands in the file.
  CHECK(redirected.out.find("optimal v_plus") != std::string::npos);
  const std::string csv_path =
      "/tmp/gaussclone_quad_" + std::to_string(::getpid()) + ".csv";
  std::ifstream csv_file(csv_path);
  std::ostringstream csv;
  csv << csv_file.rdbuf();
  CHECK(csv.str() == quad.out);
  std::remove(csv_path.c_str());
}

TEST_CASE("binary reports usage errors") {
  CHECK(run_cli("fbar --bogus-flag 3").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("fbar --steps 1").exit_code == 2);
  CHECK(run_cli("fbar --out /nonexistent-dir/x.csv").exit_code == 2);
  // singlequad scans v_plus, so the sigma flags do not exist there.
  CHECK(run_cli("singlequad --sigma-min 1").exit_code == 2);
  CHECK(run_cli("singlequad --v-min 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

}  // TEST_SUITE
