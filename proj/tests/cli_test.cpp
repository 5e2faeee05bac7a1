// Copyright 2026 The trisample Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace trisample;
using namespace trisample::testing;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("trisample_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }
  std::string write_pairs(const std::string& name, const Pairs& pairs) const {
    write_edge_list(path_ / name, pairs);
    return path(name);
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::vector<std::string> csv_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Inline --metrics for a published dataset row given n, m, Δ, C, φ/3Δ, K/Δ.
std::string inline_metrics(double n, double m, double delta, double c, double phi_ratio,
                           double k_ratio) {
  std::ostringstream s;
  s.precision(17);
  s << n << ',' << m << ',' << delta << ',' << 3 * delta / c << ',' << phi_ratio * 3 * delta
    << ',' << k_ratio * delta;
  return s.str();
}

const char* const kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("stats: triangle, path and K4") {
  TempDir dir;
  auto tri = invoke({"stats", "--graph", dir.write("tri.txt", "0 1\n1 2\n2 0\n")});
  CHECK(tri.status == 0);
  CHECK(lines_of(tri.out)[1] == "3,3,1,3,1,1,1,0");

  auto path = invoke({"stats", "--graph", dir.write("path.txt", "0 1\n1 2\n")});
  CHECK(lines_of(path.out)[1] == "3,2,0,1,0,0,0,0");

  auto k4 = invoke({"stats", "--graph", dir.write("k4.txt", kK4), "--format", "json"});
  REQUIRE(k4.status == 0);
  const json j = json::parse(k4.out);
  CHECK(j.at("delta") == 4);
  CHECK(j.at("lambda") == 12);
  CHECK(j.at("C") == 1.0);
  CHECK(j.at("phi_over_3delta") == 2.0);
  CHECK(j.at("K_over_delta") == 1.5);
}

TEST_CASE("estimate: deterministic cases") {
  TempDir dir;
  const std::string k4 = dir.write("k4.txt", kK4);
  for (const char* seed : {"1", "2", "99"}) {
    auto ews = invoke({"estimate", "--graph", k4, "--method", "ews", "--p", "1", "--seed", seed});
    REQUIRE(ews.status == 0);
    const auto cells = csv_cells(lines_of(ews.out)[1]);
    CHECK(cells[0] == "ews");
    CHECK(cells[2] == seed);
    CHECK(cells[5] == "4");
    CHECK(cells[6].empty());
  }

  const std::string er = dir.write_pairs("er.txt", erdos_renyi_pairs(40, 0.3, 8));
  const auto truth = invoke({"stats", "--graph", er, "--format", "json"});
  const auto delta = json::parse(truth.out).at("delta").get<double>();
  auto es = invoke({"estimate", "--graph", er, "--method", "es", "--p", "1", "--format", "json"});
  REQUIRE(es.status == 0);
  CHECK(json::parse(es.out).at("estimate").get<double>() == delta);

  auto ws = invoke({"estimate", "--graph", dir.write("k3.txt", "0 1\n1 2\n2 0\n"), "--method", "ws",
                    "--k", "10", "--format", "json"});
  REQUIRE(ws.status == 0);
  const json wj = json::parse(ws.out);
  CHECK(wj.at("estimate") == 1.0);
  CHECK(wj.at("raw") == 10);
  CHECK(wj.at("seconds").is_null());
}

TEST_CASE("estimate: --timing fills seconds") {
  TempDir dir;
  auto r = invoke({"estimate", "--graph", dir.write("k4.txt", kK4), "--method", "ews", "--p", "0.5",
                   "--timing", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out).at("seconds").get<double>() >= 0.0);
}

TEST_CASE("identical invocations are byte-identical") {
  TempDir dir;
  const std::string g = dir.write_pairs("g.txt", erdos_renyi_pairs(60, 0.2, 4));
  for (std::vector<std::string> args :
       {std::vector<std::string>{"estimate", "--graph", g, "--method", "ews", "--p", "0.3"},
        std::vector<std::string>{"estimate", "--graph", g, "--method", "ws", "--k", "40"},
        std::vector<std::string>{"rse-sweep", "--graph", g, "--p", "0.2", "--p", "0.5", "--runs",
                                 "40", "--format", "json"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("rse-sweep: row count and seed echo") {
  TempDir dir;
  const std::string g = dir.write_pairs("g.txt", erdos_renyi_pairs(80, 0.15, 6));
  auto r = invoke({"rse-sweep", "--graph", g, "--method", "ews", "--method", "es", "--p", "0.1",
                   "--p", "0.3", "--p", "0.6", "--runs", "30", "--seed", "11"});
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 2 * 3);
  CHECK(lines[0] == "method,p,k,sampled,empirical_rse,exact_rse,approx_rse,mean_estimate,runs,seed");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = csv_cells(lines[i]);
    CHECK(cells.size() == 10);
    CHECK(cells[8] == "30");
    CHECK(cells[9] == "11");
  }

  auto all = invoke({"rse-sweep", "--graph", g, "--p", "0.2", "--runs", "20", "--format", "json"});
  REQUIRE(all.status == 0);
  const json rows = json::parse(all.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("method") == "ews");
  CHECK(rows[1].at("method") == "ws");
  CHECK(rows[1].at("k").get<std::uint64_t>() >= 1);
  CHECK(rows[2].at("method") == "es");
}

TEST_CASE("sample-size: inline published rows") {
  auto wg = invoke({"sample-size", "--metrics",
                    inline_metrics(875e3, 4322e3, 13391e3, 0.0552, 35.4, 46.4)});
  REQUIRE(wg.status == 0);
  const auto cells = csv_cells(lines_of(wg.out)[1]);
  REQUIRE(cells.size() == 6);
  CHECK(std::stod(cells[2]) == doctest::Approx(16556).epsilon(0.02));
  CHECK(std::stod(cells[3]) == doctest::Approx(6842).epsilon(0.02));
  CHECK(std::stod(cells[4]) == doctest::Approx(1525).epsilon(0.02));
  CHECK(std::stod(cells[5]) == doctest::Approx(4.49).epsilon(0.02));

  auto fr = invoke({"sample-size", "--format", "json", "--rse", "0.05", "--metrics",
                    inline_metrics(65608e3, 1806067e3, 4173724e3, 0.0174, 311.6, 44.4)});
  REQUIRE(fr.status == 0);
  const json j = json::parse(fr.out);
  CHECK(j.at("ews").get<double>() == doctest::Approx(17976).epsilon(0.02));
  CHECK(j.at("ws_over_ews").get<double>() == doctest::Approx(1.26).epsilon(0.02));
}

TEST_CASE("sample-size: graph source and floors") {
  TempDir dir;
  auto r = invoke({"sample-size", "--graph", dir.write("k3.txt", "0 1\n1 2\n2 0\n"), "--rse", "1",
                   "--format", "json"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  for (const char* key : {"es", "ws", "ews"}) {
    CHECK(j.at(key).get<std::uint64_t>() >= 1);
    CHECK(j.at(key).get<std::uint64_t>() <= 5);
  }

  auto flat = invoke({"sample-size", "--graph", dir.write("p.txt", "0 1\n1 2\n")});
  REQUIRE(flat.status == 0);
  CHECK(lines_of(flat.out)[1] == "0.05,2,,,,");
}

TEST_CASE("--output writes to a file instead of stdout") {
  TempDir dir;
  const std::string target = dir.path("out.csv");
  auto r = invoke({"stats", "--graph", dir.write("k4.txt", kK4), "--output", target});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,m,delta,lambda,C,tri_per_edge,phi_over_3delta,K_over_delta");
}

TEST_CASE("invalid invocations fail with nothing on stdout") {
  TempDir dir;
  const std::string k4 = dir.write("k4.txt", kK4);
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"stats"},
      {"frobnicate"},
      {"stats", "--graph", dir.path("missing.txt")},
      {"stats", "--graph", dir.write("bad.txt", "0 1\n1 x\n")},
      {"stats", "--graph", dir.write("empty.txt", "# nothing\n")},
      {"stats", "--graph", k4, "--format", "xml"},
      {"estimate", "--graph", k4, "--method", "ews", "--p", "0"},
      {"estimate", "--graph", k4, "--method", "ews", "--p", "1.5"},
      {"estimate", "--graph", k4, "--method", "ews"},
      {"estimate", "--graph", k4, "--method", "ws"},
      {"estimate", "--graph", k4, "--method", "ws", "--k", "0"},
      {"estimate", "--graph", k4, "--method", "ws", "--p", "0.5"},
      {"estimate", "--graph", k4, "--method", "xyz", "--p", "0.5"},
      {"estimate", "--graph", dir.write("single.txt", "0 1\n"), "--method", "ws", "--k", "3"},
      {"rse-sweep", "--graph", k4, "--p", "0.5", "--runs", "1"},
      {"rse-sweep", "--graph", dir.write("p2.txt", "0 1\n1 2\n"), "--p", "0.5", "--runs", "10"},
      {"sample-size"},
      {"sample-size", "--graph", k4, "--metrics", "1,2,3,4,5,6"},
      {"sample-size", "--metrics", "1,2,3"},
      {"sample-size", "--graph", k4, "--rse", "0"},
  };
  for (const auto& args : cases) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    const auto r = invoke(args);
    CHECK(r.status != 0);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("parse errors report the offending line") {
  TempDir dir;
  const auto r = invoke({"stats", "--graph", dir.write("bad.txt", "0 1\n\n2 3 4\n")});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
}
