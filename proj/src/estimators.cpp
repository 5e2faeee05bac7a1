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

#include "trisample/estimators.hpp"

#include <chrono>
#include <string>

namespace trisample {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kEws: return "ews";
    case Method::kEs: return "es";
    case Method::kWs: return "ws";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "ews") return Method::kEws;
  if (name == "es") return Method::kEs;
  if (name == "ws") return Method::kWs;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

void SamplingPlan::validate() const {
  if (method == Method::kWs) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
  } else if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in (0, 1]");
  }
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
}

std::uint64_t es_closed_wedges(const Graph& g, std::span<const Edge> sampled) {
  // Half-edges grouped by hinge vertex.
  std::vector<Edge> half;
  half.reserve(sampled.size() * 2);
  for (const Edge& e : sampled) {
    half.push_back({e.u, e.v});
    half.push_back({e.v, e.u});
  }
  std::sort(half.begin(), half.end());

  std::uint64_t closed = 0;
  for (std::size_t lo = 0; lo < half.size();) {
    std::size_t hi = lo;
    while (hi < half.size() && half[hi].u == half[lo].u) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        if (g.has_edge(half[i].v, half[j].v)) ++closed;
      }
    }
    lo = hi;
  }
  return closed;
}

EstimateResult es_estimate_from_sample(const Graph& g, std::span<const Edge> sampled, double p) {
  EstimateResult r;
  r.method = Method::kEs;
  r.p_or_k = p;
  r.raw = es_closed_wedges(g, sampled);
  r.sampled = sampled.size();
  r.estimate = static_cast<double>(r.raw) / (3.0 * p * p);
  return r;
}

WedgeSampler::WedgeSampler(const Graph& g) : graph_(&g) {
  cumulative_.resize(g.vertex_count());
  std::uint64_t running = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    running += d * (d - 1) / 2;
    cumulative_[v] = running;
  }
  if (running == 0) throw NoWedgesError();
}

WedgeSampler build_wedge_sampler(const Graph& g) { return WedgeSampler(g); }

EstimateResult ws_estimate_from_wedges(const Graph& g, std::span<const Wedge> wedges,
                                       std::uint64_t total_wedges) {
  EstimateResult r;
  r.method = Method::kWs;
  r.p_or_k = static_cast<double>(wedges.size());
  for (const Wedge& w : wedges) {
    if (g.has_edge(w.a, w.b)) ++r.raw;
  }
  r.sampled = wedges.size();
  r.estimate = static_cast<double>(r.raw) * static_cast<double>(total_wedges) /
               (3.0 * static_cast<double>(wedges.size()));
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
}

}  // namespace

EstimateResult ews_estimate(const Graph& g, double p, RandomSource& rng) {
  require_probability(p);
  const auto start = Clock::now();
  const auto sampled = bernoulli_edge_sample(g, p, rng);
  EstimateResult r = ews_estimate_from_sample(g, sampled, p, rng);
  r.seed = rng.seed();
  r.seconds = seconds_since(start);
  return r;
}

EstimateResult es_estimate(const Graph& g, double p, RandomSource& rng) {
  require_probability(p);
  const auto start = Clock::now();
  const auto sampled = bernoulli_edge_sample(g, p, rng);
  EstimateResult r = es_estimate_from_sample(g, sampled, p);
  r.seed = rng.seed();
  r.seconds = seconds_since(start);
  return r;
}

EstimateResult ws_estimate(const Graph& g, std::uint64_t k, RandomSource& rng) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto start = Clock::now();
  const WedgeSampler sampler(g);
  EstimateResult r = ws_estimate(sampler, k, rng);
  r.seed = rng.seed();
  r.seconds = seconds_since(start);
  return r;
}

Estimator::Estimator(const Graph& g, const SamplingPlan& plan) : graph_(&g), plan_(plan) {
  plan_.validate();
  if (plan_.method == Method::kWs) wedges_.emplace(g);
}

EstimateResult Estimator::run(RandomSource& rng) const {
  switch (plan_.method) {
    case Method::kEws: return ews_estimate(*graph_, plan_.p, rng);
    case Method::kEs: return es_estimate(*graph_, plan_.p, rng);
    case Method::kWs: {
      const auto start = Clock::now();
      EstimateResult r = ws_estimate(*wedges_, plan_.k, rng);
      r.seed = rng.seed();
      r.seconds = seconds_since(start);
      return r;
    }
  }
  throw std::logic_error("unhandled method");
}

}  // namespace trisample
