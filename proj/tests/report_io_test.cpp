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

#include <sstream>

#include "test_support.hpp"
#include "trisample/report_io.hpp"

using namespace trisample;
using namespace trisample::testing;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("format_number round-trips") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(16.0 / 3.0) == "5.333333333333333");
  for (double x : {1e-300, 0.0552, 1.0 / 7.0, 123456789.125}) {
    CHECK(std::stod(format_number(x)) == x);
  }
}

TEST_CASE("metrics_csv: K4") {
  const auto lines = lines_of(metrics_csv(compute_metrics(complete_graph(4))));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "n,m,delta,lambda,C,tri_per_edge,phi_over_3delta,K_over_delta");
  CHECK(lines[1] == "4,6,4,12,1,2,2,1.5");
}

TEST_CASE("metrics_csv: triangle-free graph reports zero ratios") {
  const auto lines = lines_of(metrics_csv(compute_metrics(path_graph(3))));
  CHECK(lines[1] == "3,2,0,1,0,0,0,0");
}

TEST_CASE("metrics_json round-trips") {
  const GraphMetrics m = compute_metrics(worked_example_graph());
  const json parsed = json::parse(metrics_json(m).dump());
  CHECK(parsed.at("delta").get<std::uint64_t>() == 5);
  CHECK(parsed.at("lambda").get<std::uint64_t>() == 56);
  CHECK(parsed.at("C").get<double>() == m.clustering);
  CHECK(parsed.at("K").get<std::uint64_t>() == m.shared_pairs);
}

TEST_CASE("estimate output: seconds omitted unless requested") {
  EstimateResult r;
  r.method = Method::kEws;
  r.p_or_k = 0.25;
  r.seed = 7;
  r.raw = 12;
  r.sampled = 30;
  r.estimate = 16.0;
  r.seconds = 0.125;
  const auto plain = lines_of(estimate_csv(r, false));
  CHECK(plain[0] == "method,p_or_k,seed,raw,sampled,estimate,seconds");
  CHECK(plain[1] == "ews,0.25,7,12,30,16,");
  CHECK(lines_of(estimate_csv(r, true))[1] == "ews,0.25,7,12,30,16,0.125");
  CHECK(estimate_json(r, false).at("seconds").is_null());
  CHECK(estimate_json(r, true).at("seconds").get<double>() == 0.125);
  CHECK(estimate_json(r, false).at("method") == "ews");
}

TEST_CASE("rse report: k column only for WS rows") {
  RseReport report(2);
  report[0].method = Method::kEws;
  report[0].p = 0.1;
  report[0].runs = 10;
  report[0].seed = 3;
  report[1].method = Method::kWs;
  report[1].p = 0.1;
  report[1].k = 218;
  report[1].runs = 10;
  report[1].seed = 3;
  const auto lines = lines_of(rse_report_csv(report));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "method,p,k,sampled,empirical_rse,exact_rse,approx_rse,mean_estimate,runs,seed");
  CHECK(lines[1].starts_with("ews,0.1,,"));
  CHECK(lines[2].starts_with("ws,0.1,218,"));
  CHECK(lines[2].ends_with(",10,3"));

  const json parsed = json::parse(rse_report_json(report).dump());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].at("k").is_null());
  CHECK(parsed[1].at("k").get<std::uint64_t>() == 218);
}

TEST_CASE("sample size table: Web-Google row") {
  const GraphFeatures wg = GraphFeatures::from_ratios(875e3, 4322e3, 13391e3, 0.0552, 35.4, 46.4);
  const SampleSizeTable t = sample_size_table({0.05, wg});
  REQUIRE(t.ews.has_value());
  REQUIRE(t.ws.has_value());
  REQUIRE(t.es.has_value());
  CHECK(static_cast<double>(*t.ews) == doctest::Approx(1525).epsilon(0.02));
  CHECK(*t.ws_over_ews() == doctest::Approx(4.49).epsilon(0.02));
  const auto lines = lines_of(sample_size_csv(t));
  CHECK(lines[0] == "target_rse,m,es,ws,ews,ws_over_ews");
  CHECK(lines[1].starts_with("0.05,4322000,"));
}

TEST_CASE("sample size table: undefined methods are left empty") {
  const SampleSizeTable t =
      sample_size_table({0.05, GraphFeatures::from_metrics(compute_metrics(path_graph(5)))});
  CHECK_FALSE(t.ews.has_value());
  CHECK_FALSE(t.ws.has_value());
  CHECK_FALSE(t.es.has_value());
  CHECK_FALSE(t.ws_over_ews().has_value());
  CHECK(lines_of(sample_size_csv(t))[1] == "0.05,4,,,,");
  const json j = sample_size_json(t);
  CHECK(j.at("ws").is_null());
  CHECK_THROWS_AS(sample_size_table({0.0, GraphFeatures{}}), std::domain_error);
}
