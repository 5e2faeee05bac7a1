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

#include "trisample/report_io.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace trisample {

using nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

namespace {

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) line += ',';
    line += cell;
    first = false;
  }
  line += '\n';
  return line;
}

template <class T>
std::string optional_cell(const std::optional<T>& value) {
  if (!value) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_number(*value);
  } else {
    return std::to_string(*value);
  }
}

template <class T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

std::string metrics_csv(const GraphMetrics& m) {
  return csv_row({"n", "m", "delta", "lambda", "C", "tri_per_edge", "phi_over_3delta",
                  "K_over_delta"}) +
         csv_row({std::to_string(m.n), std::to_string(m.m), std::to_string(m.triangles),
                  std::to_string(m.wedges), format_number(m.clustering),
                  format_number(m.triangles_per_edge()), format_number(m.phi_over_3delta()),
                  format_number(m.k_over_delta())});
}

json metrics_json(const GraphMetrics& m) {
  return json{{"n", m.n},
              {"m", m.m},
              {"delta", m.triangles},
              {"lambda", m.wedges},
              {"C", m.clustering},
              {"phi", m.phi},
              {"K", m.shared_pairs},
              {"tri_per_edge", m.triangles_per_edge()},
              {"phi_over_3delta", m.phi_over_3delta()},
              {"K_over_delta", m.k_over_delta()}};
}

std::string estimate_csv(const EstimateResult& r, bool include_seconds) {
  return csv_row({"method", "p_or_k", "seed", "raw", "sampled", "estimate", "seconds"}) +
         csv_row({std::string(method_name(r.method)), format_number(r.p_or_k),
                  std::to_string(r.seed), std::to_string(r.raw), std::to_string(r.sampled),
                  format_number(r.estimate),
                  include_seconds ? format_number(r.seconds) : std::string()});
}

json estimate_json(const EstimateResult& r, bool include_seconds) {
  return json{{"method", method_name(r.method)},
              {"p_or_k", r.p_or_k},
              {"seed", r.seed},
              {"raw", r.raw},
              {"sampled", r.sampled},
              {"estimate", r.estimate},
              {"seconds", include_seconds ? json(r.seconds) : json(nullptr)}};
}

std::string rse_report_csv(const RseReport& report) {
  std::string out = csv_row({"method", "p", "k", "sampled", "empirical_rse", "exact_rse",
                             "approx_rse", "mean_estimate", "runs", "seed"});
  for (const RseRow& row : report) {
    out += csv_row({std::string(method_name(row.method)), format_number(row.p),
                    optional_cell(row.k), format_number(row.sampled),
                    format_number(row.empirical_rse), format_number(row.exact_rse),
                    format_number(row.approx_rse), format_number(row.mean_estimate),
                    std::to_string(row.runs), std::to_string(row.seed)});
  }
  return out;
}

json rse_report_json(const RseReport& report) {
  json rows = json::array();
  for (const RseRow& row : report) {
    rows.push_back(json{{"method", method_name(row.method)},
                        {"p", row.p},
                        {"k", optional_json(row.k)},
                        {"sampled", row.sampled},
                        {"empirical_rse", row.empirical_rse},
                        {"exact_rse", row.exact_rse},
                        {"approx_rse", row.approx_rse},
                        {"mean_estimate", row.mean_estimate},
                        {"runs", row.runs},
                        {"seed", row.seed}});
  }
  return rows;
}

std::optional<double> SampleSizeTable::ws_over_ews() const {
  if (!ws || !ews) return std::nullopt;
  return static_cast<double>(*ws) / static_cast<double>(*ews);
}

SampleSizeTable sample_size_table(const SampleSizeRequest& request) {
  if (!(request.target_rse > 0.0 && request.target_rse <= 1.0)) {
    throw std::domain_error("target RSE must lie in (0, 1]");
  }
  SampleSizeTable table;
  table.target_rse = request.target_rse;
  table.m = request.features.m;
  auto attempt = [&](Method method) -> std::optional<std::uint64_t> {
    try {
      return sample_size_for_rse(request, method);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };
  table.es = attempt(Method::kEs);
  table.ws = attempt(Method::kWs);
  table.ews = attempt(Method::kEws);
  return table;
}

std::string sample_size_csv(const SampleSizeTable& t) {
  return csv_row({"target_rse", "m", "es", "ws", "ews", "ws_over_ews"}) +
         csv_row({format_number(t.target_rse), format_number(t.m), optional_cell(t.es),
                  optional_cell(t.ws), optional_cell(t.ews), optional_cell(t.ws_over_ews())});
}

json sample_size_json(const SampleSizeTable& t) {
  return json{{"target_rse", t.target_rse},
              {"m", t.m},
              {"es", optional_json(t.es)},
              {"ws", optional_json(t.ws)},
              {"ews", optional_json(t.ews)},
              {"ws_over_ews", optional_json(t.ws_over_ews())}};
}

}  // namespace trisample
