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

#ifndef TRISAMPLE_REPORT_IO_HPP_
#define TRISAMPLE_REPORT_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "trisample/analysis.hpp"
#include "trisample/estimators.hpp"
#include "trisample/exact_metrics.hpp"

namespace trisample {

// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

// n,m,delta,lambda,C,tri_per_edge,phi_over_3delta,K_over_delta
std::string metrics_csv(const GraphMetrics& metrics);
nlohmann::json metrics_json(const GraphMetrics& metrics);

// {method, p_or_k, seed, raw, sampled, estimate, seconds}. Without
// include_seconds the seconds field is null (JSON) or empty (CSV) so that
// repeated invocations stay byte-identical.
std::string estimate_csv(const EstimateResult& result, bool include_seconds);
nlohmann::json estimate_json(const EstimateResult& result, bool include_seconds);

// method,p,k,sampled,empirical_rse,exact_rse,approx_rse,mean_estimate,runs,seed
std::string rse_report_csv(const RseReport& report);
nlohmann::json rse_report_json(const RseReport& report);

struct SampleSizeTable {
  double target_rse = 0.0;
  double m = 0.0;
  std::optional<std::uint64_t> es;
  std::optional<std::uint64_t> ws;
  std::optional<std::uint64_t> ews;

  std::optional<double> ws_over_ews() const;
};

// Methods whose formula is undefined for the given features are left empty.
SampleSizeTable sample_size_table(const SampleSizeRequest& request);

// target_rse,m,es,ws,ews,ws_over_ews
std::string sample_size_csv(const SampleSizeTable& table);
nlohmann::json sample_size_json(const SampleSizeTable& table);

}  // namespace trisample

#endif  // TRISAMPLE_REPORT_IO_HPP_
