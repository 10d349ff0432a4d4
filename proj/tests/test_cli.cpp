// Copyright 2026 The cmaxlab Authors
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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cmax/cli.hpp"
#include "cmax/output.hpp"

using cmax::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
  }
  double value(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string& doc) {
  Csv csv;
  std::istringstream in(doc);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("evolve, analytic") {
  const auto r = call({"evolve", "--xi", "2", "--tau-max", "3", "--steps", "301", "--method", "analytic"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"tau", "c_re_e0", "c_im_e0", "c_re_g1", "c_im_g1", "p_e0", "p_g1",
                                               "p_g0", "survival", "concurrence"});
  REQUIRE(csv.rows.size() == 301);
  CHECK(csv.value(50, "tau") == 0.5);
  CHECK(csv.value(50, "concurrence") == doctest::Approx(0.70391).epsilon(1e-5));
  CHECK(r.out.find("# schema_version: 1.0.0") != std::string::npos);
  CHECK(r.out.find("# version: 1.0.0") != std::string::npos);
  CHECK(r.out.find("\"steps\":301") != std::string::npos);
}

TEST_CASE("evolve, Lindblad agrees with analytic") {
  const auto a = parse_csv(call({"evolve", "--xi", "2", "--method", "analytic"}).out);
  const auto l = call({"evolve", "--xi", "2", "--method", "lindblad"});
  REQUIRE(l.code == 0);
  const auto lc = parse_csv(l.out);
  CHECK(lc.header == std::vector<std::string>{"tau", "p_e0", "p_g1", "p_g0", "survival", "concurrence"});
  REQUIRE(lc.rows.size() == a.rows.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    worst = std::max(worst, std::abs(a.value(i, "concurrence") - lc.value(i, "concurrence")));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("evolve, multimode") {
  const auto r = call({"evolve", "--xi", "2", "--tau-max", "1", "--steps", "11", "--method", "multimode", "--modes",
                       "801", "--window", "20", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["columns"].back() == "reservoir_concurrence");
  CHECK(doc["metadata"]["recurrence_horizon"].get<double>() > 1.0);
  CHECK(doc["data"].size() == 11);
}

TEST_CASE("usage errors exit with status 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"evolve", "--xi", "-1"},
           {"evolve", "--xi", "0"},
           {"evolve"},
           {"evolve", "--xi", "2", "--steps", "1"},
           {"evolve", "--xi", "2", "--bogus", "3"},
           {"evolve", "--xi", "2", "--format", "xml"},
           {"evolve", "--xi", "abc"},
           {"evolve", "--xi", "2", "--method", "exact"},
           {"heatmap", "--xi-min", "5", "--xi-max", "1"},
           {"sideband", "--g", "2.5", "--kappa", "5", "--n", "1"},
           {"sideband", "--g", "2.5", "--kappa", "5", "--n", "1", "--epsilon", "1", "--target-xi", "1"},
           {"verify", "--quick", "--full"},
           {"launch"},
           {},
       }) {
    const auto r = call(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help and version succeed") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("heatmap") != std::string::npos);
  r = call({"evolve", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--tau-max") != std::string::npos);
  r = call({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.0.0\n");
}

TEST_CASE("heatmap") {
  const std::vector<std::string> args{"heatmap", "--xi-min", "0.1", "--xi-max", "5", "--xi-steps", "6",
                                      "--tau-max", "2", "--tau-steps", "9"};
  const auto r = call(args);
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"xi", "tau", "concurrence", "p_e0", "p_g1", "p_g0", "survival"});
  CHECK(csv.rows.size() == 6 * 9);
  CHECK(csv.value(0, "xi") == 0.1);
  CHECK(csv.value(8, "xi") == 0.1);
  CHECK(csv.value(9, "xi") > 0.1);
  CHECK(r.out.find("# order: xi-major") != std::string::npos);
}

TEST_CASE("heatmap data section is independent of the thread setting") {
  const std::vector<std::string> args{"heatmap", "--xi-steps", "7", "--tau-steps", "13", "--method", "lindblad"};
  setenv(cmax::cli::kThreadsEnv, "1", 1);
  const auto one = call(args);
  setenv(cmax::cli::kThreadsEnv, "4", 1);
  const auto four = call(args);
  unsetenv(cmax::cli::kThreadsEnv);
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(cmax::io::data_section(one.out, cmax::io::Format::csv) ==
        cmax::io::data_section(four.out, cmax::io::Format::csv));
  CHECK(one.out.find("# threads: 1") != std::string::npos);
  CHECK(four.out.find("# threads: 4") != std::string::npos);
}

TEST_CASE("invalid thread setting is a usage error") {
  setenv(cmax::cli::kThreadsEnv, "many", 1);
  const auto r = call({"cmax", "--steps", "3"});
  unsetenv(cmax::cli::kThreadsEnv);
  CHECK(r.code == 2);
  CHECK(cmax::cli::threads_from_env(nullptr) == std::nullopt);
  CHECK(cmax::cli::threads_from_env("") == std::nullopt);
  CHECK(cmax::cli::threads_from_env(" 3") == 3);
  CHECK_THROWS_AS(cmax::cli::threads_from_env("0"), cmax::cli::UsageError);
  CHECK_THROWS_AS(cmax::cli::threads_from_env("2x"), cmax::cli::UsageError);
}

TEST_CASE("cmax") {
  const auto r = call({"cmax", "--xi-min", "0.5", "--xi-max", "2", "--steps", "4", "--scale", "linear", "--format",
                       "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["columns"] == nlohmann::json({"xi", "tau_opt", "c_max", "dcmax_dxi", "source"}));
  CHECK(doc["metadata"]["monotone"] == true);
  const auto& row = doc["data"][1];
  CHECK(row[0].get<double>() == 1.0);
  CHECK(row[1].get<double>() == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK(row[2].get<double>() == doctest::Approx(0.58694).epsilon(1e-4));
  CHECK(doc["data"][3][4] == "formula");

  const auto full = parse_csv(call({"cmax"}).out);
  REQUIRE(full.rows.size() == 200);
  for (std::size_t i = 1; i < full.rows.size(); ++i) {
    CHECK(full.value(i, "c_max") >= full.value(i - 1, "c_max"));
    CHECK(full.value(i, "dcmax_dxi") > 0.0);
  }
}

TEST_CASE("sideband") {
  auto r = call({"sideband", "--g", "2.5", "--kappa", "5", "--n", "1", "--epsilon", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["data"][0][3].get<double>() == 0.0);
  CHECK(doc["data"][0][4].get<double>() == 0.0);

  r = call({"sideband", "--g", "2.5", "--kappa", "5", "--n", "1", "--target-xi", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["columns"] == nlohmann::json({"mode", "epsilon", "mu", "lambda", "xi"}));
  CHECK(doc["data"][0][2].get<double>() == doctest::Approx(1.2067184630059085).epsilon(1e-10));
  CHECK(doc["data"][0][4].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  r = call({"sideband", "--g", "2.5", "--kappa", "5", "--n", "1", "--target-xi", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("maximum achievable xi is 1.16373") != std::string::npos);

  r = call({"sideband", "--g", "2.5", "--kappa", "5", "--n", "1", "--epsilon", "1.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda: ") != std::string::npos);

  r = call({"sideband", "--g", "1", "--kappa", "1", "--n", "2", "--nu", "0.3", "--epsilon", "0.5", "--omega-q", "5",
            "--omega-r", "5.5"});
  CHECK(r.code == 1);
}

TEST_CASE("config file with command-line precedence") {
  write_file("cli_test.cfg", "# evolve settings\nxi = 3\ntau_max=1\nsteps = 5\nformat=json\n");
  auto r = call({"evolve", "--config", "cli_test.cfg", "--steps", "3"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["metadata"]["config"]["xi"] == 3.0);
  CHECK(doc["metadata"]["config"]["tau_max"] == 1.0);
  CHECK(doc["metadata"]["config"]["steps"] == 3);
  CHECK(doc["metadata"]["config_file"] == "cli_test.cfg");
  CHECK(doc["data"].size() == 3);

  write_file("cli_flags.cfg", "quick=true\nformat=csv\n");
  CHECK(cmax::cli::read_config("cli_flags.cfg").size() == 2);

  write_file("cli_unknown.cfg", "xi=2\ncolour=blue\n");
  CHECK(call({"evolve", "--config", "cli_unknown.cfg"}).code == 2);
  write_file("cli_malformed.cfg", "xi 2\n");
  CHECK(call({"evolve", "--config", "cli_malformed.cfg"}).code == 2);
  CHECK(call({"evolve", "--config", "does_not_exist.cfg"}).code == 2);
}

TEST_CASE("--out writes the document to a file") {
  std::remove("cli_out.csv");
  const auto r = call({"evolve", "--xi", "1", "--steps", "4", "--out", "cli_out.csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto text = read_file("cli_out.csv");
  CHECK(parse_csv(text).rows.size() == 4);
  CHECK(call({"evolve", "--xi", "1", "--out", "no_such_dir/x.csv"}).code == 1);
}

TEST_CASE("numeric failures exit with status 1") {
  // Log axis through a tiny xi forces the derivative step past xi.
  const auto r = call({"cmax", "--xi-min", "1e-5", "--xi-max", "1", "--steps", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}
