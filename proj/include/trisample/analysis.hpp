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

#ifndef TRISAMPLE_ANALYSIS_HPP_
#define TRISAMPLE_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trisample/estimators.hpp"
#include "trisample/exact_metrics.hpp"
#include "trisample/graph.hpp"

namespace trisample {

// Graph quantities as reals, so they can come from published (rounded)
// tables as well as from compute_metrics().
struct GraphFeatures {
  double n = 0;
  double m = 0;
  double triangles = 0;
  double wedges = 0;
  double phi = 0;
  double shared_pairs = 0;

  double clustering() const { return wedges > 0 ? 3.0 * triangles / wedges : 0.0; }

  static GraphFeatures from_metrics(const GraphMetrics& metrics);

  // From the ratio columns of a dataset-features table: C = 3Δ/Λ,
  // φ/(3Δ) and K/Δ.
  static GraphFeatures from_ratios(double n, double m, double triangles, double clustering,
                                   double phi_over_3delta, double k_over_delta);
};

// Closed-form relative standard errors. Every function throws
// std::domain_error outside its stated domain.

// sqrt(pφ - p²(3Δ + 2K)) / (3pΔ)
double rse_tau_exact(double p, double triangles, double shared_pairs, double phi);
// sqrt(φ / (9pΔ²))
double rse_tau_approx(double p, double triangles, double phi);

// Without-replacement form: sqrt((1-C)/(pmC) · (1 - (pm-1)/(Λ-1))).
double rse_omega_exact(double p, double m, double clustering, double wedges);
// sqrt((1-C)/(pmC))
double rse_omega_approx(double p, double m, double clustering);

// sqrt(3Δ(p²-p⁴) + (6Δ + 8K)(p³-p⁴)) / (3p²Δ). Unlike the other exact
// forms this can exceed its approximation: the approximation omits the
// positive 6Δ(p³-p⁴) within-triangle covariance.
double rse_rho_exact(double p, double triangles, double shared_pairs);
// sqrt(1/(3p²Δ) + 8K/(9pΔ²))
double rse_rho_approx(double p, double triangles, double shared_pairs);

struct TheoryRse {
  double exact = 0.0;
  double approx = 0.0;
};

// p is the per-edge sampling probability; for WS pass k/m.
TheoryRse theory_rse(Method method, double p, const GraphFeatures& features);

struct SampleSizeRequest {
  double target_rse = 0.05;
  GraphFeatures features;
};

// Smallest entity count (edges for ES, wedges for WS and EWS) whose
// approximate RSE is at most the target.
std::uint64_t sample_size_for_rse(const SampleSizeRequest& request, Method method);

struct RseRow {
  Method method = Method::kEws;
  double p = 0.0;
  std::optional<std::uint64_t> k;  // WS only
  double sampled = 0.0;            // mean entities sampled per run
  double empirical_rse = 0.0;
  double exact_rse = 0.0;
  double approx_rse = 0.0;
  double mean_estimate = 0.0;
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
};

using RseReport = std::vector<RseRow>;

struct TrialOutcomes {
  std::vector<double> estimates;
  std::vector<std::uint64_t> sampled;
};

// Runs plan.runs trials; trial i draws from RandomSource(plan.seed).derive(i).
// Trials are spread over the given number of workers (0 = hardware concurrency); the
// result does not depend on the thread count.
TrialOutcomes run_trials(const Graph& g, const SamplingPlan& plan, unsigned threads = 0);

// Neumaier-compensated mean.
double compensated_mean(std::span<const double> values);

// RMS deviation of estimates about their own mean, divided by Δ.
double relative_standard_error(std::span<const double> estimates, double exact_triangles);

// Throws std::domain_error when metrics.triangles == 0, and
// std::invalid_argument when plan.runs < 2.
RseRow empirical_rse(const Graph& g, const SamplingPlan& plan, const GraphMetrics& metrics,
                     unsigned threads = 0);

// Nearest integer when p·m is within 1e-9 relative of one, else ⌈p·m⌉.
std::uint64_t wedge_count_for(double p, std::uint64_t m);

// One row per (method, p), methods outermost. WS uses k = wedge_count_for(p, m).
RseReport rse_sweep(const Graph& g, std::span<const Method> methods, std::span<const double> ps,
                    std::uint64_t runs, std::uint64_t seed, const GraphMetrics& metrics,
                    unsigned threads = 0);

}  // namespace trisample

#endif  // TRISAMPLE_ANALYSIS_HPP_
