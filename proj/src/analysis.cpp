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

#include "trisample/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace trisample {

GraphFeatures GraphFeatures::from_metrics(const GraphMetrics& metrics) {
  GraphFeatures f;
  f.n = static_cast<double>(metrics.n);
  f.m = static_cast<double>(metrics.m);
  f.triangles = static_cast<double>(metrics.triangles);
  f.wedges = static_cast<double>(metrics.wedges);
  f.phi = static_cast<double>(metrics.phi);
  f.shared_pairs = static_cast<double>(metrics.shared_pairs);
  return f;
}

GraphFeatures GraphFeatures::from_ratios(double n, double m, double triangles,
                                         double clustering, double phi_over_3delta,
                                         double k_over_delta) {
  GraphFeatures f;
  f.n = n;
  f.m = m;
  f.triangles = triangles;
  f.wedges = clustering > 0 ? 3.0 * triangles / clustering : 0.0;
  f.phi = phi_over_3delta * 3.0 * triangles;
  f.shared_pairs = k_over_delta * triangles;
  return f;
}

namespace {

void require_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0, 1]");
}

void require_triangles(double triangles) {
  if (!(triangles > 0.0)) throw std::domain_error("triangle count must be positive");
}

void require_clustering(double clustering) {
  if (!(clustering > 0.0 && clustering <= 1.0)) {
    throw std::domain_error("clustering coefficient must lie in (0, 1]");
  }
}

// Rounding can leave a vanishing radicand slightly negative; anything
// beyond that is a genuine domain violation.
double checked_sqrt(double radicand, double scale) {
  if (radicand < 0.0) {
    if (radicand < -1e-12 * std::max(1.0, std::abs(scale))) {
      throw std::domain_error("negative variance: inconsistent metrics");
    }
    return 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace

double rse_tau_exact(double p, double triangles, double shared_pairs, double phi) {
  require_p(p);
  require_triangles(triangles);
  const double positive = p * phi;
  const double variance = positive - p * p * (3.0 * triangles + 2.0 * shared_pairs);
  return checked_sqrt(variance, positive) / (3.0 * p * triangles);
}

double rse_tau_approx(double p, double triangles, double phi) {
  require_p(p);
  require_triangles(triangles);
  return std::sqrt(phi / (9.0 * p * triangles * triangles));
}

double rse_omega_exact(double p, double m, double clustering, double wedges) {
  require_p(p);
  require_clustering(clustering);
  const double k = p * m;
  if (k < 1.0) throw std::domain_error("p·m must be at least 1");
  const double correction = wedges > 1.0 ? 1.0 - (k - 1.0) / (wedges - 1.0) : 0.0;
  const double base = (1.0 - clustering) / (k * clustering);
  return checked_sqrt(base * correction, base);
}

double rse_omega_approx(double p, double m, double clustering) {
  require_p(p);
  require_clustering(clustering);
  return std::sqrt((1.0 - clustering) / (p * m * clustering));
}

double rse_rho_exact(double p, double triangles, double shared_pairs) {
  require_p(p);
  require_triangles(triangles);
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p4 = p2 * p2;
  // Closed wedges of one triangle pairwise share an edge, which adds
  // 6Δ(p³ - p⁴) to the covariance sum alongside the 8K(p³ - p⁴) from
  // distinct triangles sharing an edge.
  const double variance =
      3.0 * triangles * (p2 - p4) + (6.0 * triangles + 8.0 * shared_pairs) * (p3 - p4);
  return checked_sqrt(variance, 3.0 * triangles * p2) / (3.0 * p2 * triangles);
}

double rse_rho_approx(double p, double triangles, double shared_pairs) {
  require_p(p);
  require_triangles(triangles);
  return std::sqrt(1.0 / (3.0 * p * p * triangles) +
                   8.0 * shared_pairs / (9.0 * p * triangles * triangles));
}

TheoryRse theory_rse(Method method, double p, const GraphFeatures& f) {
  switch (method) {
    case Method::kEws:
      return {rse_tau_exact(p, f.triangles, f.shared_pairs, f.phi),
              rse_tau_approx(p, f.triangles, f.phi)};
    case Method::kEs:
      return {rse_rho_exact(p, f.triangles, f.shared_pairs),
              rse_rho_approx(p, f.triangles, f.shared_pairs)};
    case Method::kWs:
      return {rse_omega_exact(p, f.m, f.clustering(), f.wedges),
              rse_omega_approx(p, f.m, f.clustering())};
  }
  throw std::logic_error("unhandled method");
}

std::uint64_t sample_size_for_rse(const SampleSizeRequest& request, Method method) {
  const double r = request.target_rse;
  const GraphFeatures& f = request.features;
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("target RSE must lie in (0, 1]");
  const double r2 = r * r;

  double entities = 0.0;
  switch (method) {
    case Method::kEws:
      require_triangles(f.triangles);
      if (!(f.m > 0.0)) throw std::domain_error("edge count must be positive");
      // φ/(9pΔ²) = r²  =>  p·m = m·φ / (9 r² Δ²)
      entities = f.m * f.phi / (9.0 * r2 * f.triangles * f.triangles);
      break;
    case Method::kWs: {
      const double c = f.clustering();
      if (!(c > 0.0)) throw std::domain_error("clustering coefficient is zero");
      entities = (1.0 - c) / (r2 * c);
      break;
    }
    case Method::kEs: {
      require_triangles(f.triangles);
      if (!(f.m > 0.0)) throw std::domain_error("edge count must be positive");
      // With x = 1/p: x²/(3Δ) + x·8K/(9Δ²) - r² = 0. The positive root in
      // the cancellation-free form 2c / (b + sqrt(b² + 4ac)).
      const double a = 1.0 / (3.0 * f.triangles);
      const double b = 8.0 * f.shared_pairs / (9.0 * f.triangles * f.triangles);
      const double disc = b * b + 4.0 * a * r2;
      if (!(disc > 0.0)) throw std::domain_error("non-positive discriminant");
      const double x = 2.0 * r2 / (b + std::sqrt(disc));
      entities = f.m / x;
      break;
    }
  }
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(entities)));
}

double compensated_mean(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return values.empty() ? 0.0 : (sum + carry) / static_cast<double>(values.size());
}

double relative_standard_error(std::span<const double> estimates, double exact_triangles) {
  if (!(exact_triangles > 0.0)) throw std::domain_error("RSE undefined for zero triangles");
  const double mu = compensated_mean(estimates);
  std::vector<double> squares(estimates.size());
  std::transform(estimates.begin(), estimates.end(), squares.begin(),
                 [mu](double x) { return (x - mu) * (x - mu); });
  return std::sqrt(compensated_mean(squares)) / exact_triangles;
}

TrialOutcomes run_trials(const Graph& g, const SamplingPlan& plan, unsigned threads) {
  const Estimator estimator(g, plan);
  const RandomSource base(plan.seed);
  TrialOutcomes out;
  out.estimates.resize(plan.runs);
  out.sampled.resize(plan.runs);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, plan.runs));

  auto worker = [&](unsigned id) {
    for (std::uint64_t i = id; i < plan.runs; i += threads) {
      RandomSource rng = base.derive(i);
      const EstimateResult r = estimator.run(rng);
      out.estimates[i] = r.estimate;
      out.sampled[i] = r.sampled;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  return out;
}

RseRow empirical_rse(const Graph& g, const SamplingPlan& plan, const GraphMetrics& metrics,
                     unsigned threads) {
  if (metrics.triangles == 0) throw std::domain_error("RSE undefined for zero triangles");
  if (plan.runs < 2) throw std::invalid_argument("empirical RSE needs at least 2 runs");
  plan.validate();

  const TrialOutcomes trials = run_trials(g, plan, threads);
  std::vector<double> sampled(trials.sampled.begin(), trials.sampled.end());

  RseRow row;
  row.method = plan.method;
  row.runs = plan.runs;
  row.seed = plan.seed;
  row.sampled = compensated_mean(sampled);
  row.mean_estimate = compensated_mean(trials.estimates);
  row.empirical_rse =
      relative_standard_error(trials.estimates, static_cast<double>(metrics.triangles));

  double p_eff = plan.p;
  if (plan.method == Method::kWs) {
    row.k = plan.k;
    p_eff = static_cast<double>(plan.k) / static_cast<double>(metrics.m);
    row.p = p_eff;
  } else {
    row.p = plan.p;
  }
  const TheoryRse theory = theory_rse(plan.method, p_eff, GraphFeatures::from_metrics(metrics));
  row.exact_rse = theory.exact;
  row.approx_rse = theory.approx;
  return row;
}

std::uint64_t wedge_count_for(double p, std::uint64_t m) {
  const double x = p * static_cast<double>(m);
  const double nearest = std::round(x);
  const double k = std::abs(x - nearest) <= 1e-9 * std::max(1.0, x) ? nearest : std::ceil(x);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

RseReport rse_sweep(const Graph& g, std::span<const Method> methods, std::span<const double> ps,
                    std::uint64_t runs, std::uint64_t seed, const GraphMetrics& metrics,
                    unsigned threads) {
  if (ps.empty()) throw std::invalid_argument("sweep needs at least one p");
  RseReport report;
  report.reserve(methods.size() * ps.size());
  for (Method method : methods) {
    for (double p : ps) {
      SamplingPlan plan;
      plan.method = method;
      plan.p = p;
      plan.seed = seed;
      plan.runs = runs;
      if (method == Method::kWs) {
        if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
        plan.k = wedge_count_for(p, metrics.m);
      }
      RseRow row = empirical_rse(g, plan, metrics, threads);
      row.p = p;
      report.push_back(row);
    }
  }
  return report;
}

}  // namespace trisample
