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

#ifndef TRISAMPLE_ESTIMATORS_HPP_
#define TRISAMPLE_ESTIMATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "trisample/graph.hpp"
#include "trisample/random_source.hpp"

namespace trisample {

enum class Method { kEws, kEs, kWs };

std::string_view method_name(Method method);  // "ews", "es", "ws"
Method parse_method(std::string_view name);   // throws std::invalid_argument

inline constexpr std::uint64_t kDefaultSeed = 20170601;

struct SamplingPlan {
  Method method = Method::kEws;
  double p = 0.0;         // edge-sampling probability, EWS and ES
  std::uint64_t k = 0;    // wedge draws, WS
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t runs = 1;

  // Throws std::invalid_argument when the parameter the method needs is
  // out of range or runs == 0.
  void validate() const;
  double p_or_k() const { return method == Method::kWs ? static_cast<double>(k) : p; }
};

// raw is τ for EWS, the closed-wedge count Λ̂⁺ for ES, and ω for WS.
struct EstimateResult {
  Method method = Method::kEws;
  double p_or_k = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t raw = 0;
  std::uint64_t sampled = 0;
  double estimate = 0.0;
  double seconds = 0.0;
};

class NoWedgesError : public std::domain_error {
 public:
  NoWedgesError() : std::domain_error("graph has no wedges") {}
};

// Each canonical edge kept independently with probability p, visited in
// canonical (u, v) order.
template <UniformSource S>
std::vector<Edge> bernoulli_edge_sample(const Graph& g, double p, S& rng) {
  std::vector<Edge> sampled;
  sampled.reserve(static_cast<std::size_t>(p * static_cast<double>(g.edge_count()) * 1.1) + 8);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto list = g.neighbors(u);
    for (auto it = std::upper_bound(list.begin(), list.end(), u); it != list.end(); ++it) {
      if (rng.uniform_real() < p) sampled.push_back({u, *it});
    }
  }
  return sampled;
}

// Second phase of edge-based wedge sampling. For each sampled edge, hinge
// at the lower-degree endpoint v, draw one other neighbor w of v uniformly
// and add d_v - 1 to τ when the wedge closes. Pendant hinges contribute 0.
template <UniformSource S>
std::uint64_t ews_tau(const Graph& g, std::span<const Edge> sampled, S& rng) {
  std::uint64_t tau = 0;
  for (const Edge& e : sampled) {
    const VertexId v = g.hinge_of(e);
    const VertexId u = v == e.u ? e.v : e.u;
    const std::size_t dv = g.degree(v);
    if (dv < 2) continue;
    auto list = g.neighbors(v);
    const auto skip = static_cast<std::uint64_t>(
        std::lower_bound(list.begin(), list.end(), u) - list.begin());
    std::uint64_t i = rng.uniform_index(dv - 1);
    if (i >= skip) ++i;
    if (g.has_edge(u, list[i])) tau += dv - 1;
  }
  return tau;
}

template <UniformSource S>
EstimateResult ews_estimate_from_sample(const Graph& g, std::span<const Edge> sampled,
                                        double p, S& rng) {
  EstimateResult r;
  r.method = Method::kEws;
  r.p_or_k = p;
  r.raw = ews_tau(g, sampled, rng);
  r.sampled = sampled.size();
  r.estimate = static_cast<double>(r.raw) / (3.0 * p);
  return r;
}

// Pairs of sampled edges sharing a vertex, counted once at the shared
// vertex, whose third edge exists in g.
std::uint64_t es_closed_wedges(const Graph& g, std::span<const Edge> sampled);

EstimateResult es_estimate_from_sample(const Graph& g, std::span<const Edge> sampled, double p);

struct Wedge {
  VertexId hinge = 0;
  VertexId a = 0;
  VertexId b = 0;
};

// Prefix sums of per-vertex wedge counts for drawing hinges in proportion
// to d_v (d_v - 1) / 2.
class WedgeSampler {
 public:
  // Throws NoWedgesError when the graph has no wedges.
  explicit WedgeSampler(const Graph& g);

  const Graph& graph() const { return *graph_; }
  std::uint64_t total_wedges() const { return cumulative_.back(); }
  std::span<const std::uint64_t> cumulative() const { return cumulative_; }

  template <UniformSource S>
  Wedge draw(S& rng) const {
    const std::uint64_t r = rng.uniform_index(total_wedges());
    const auto hinge = static_cast<VertexId>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), r) - cumulative_.begin());
    const std::size_t d = graph_->degree(hinge);
    const std::uint64_t i = rng.uniform_index(d);
    std::uint64_t j = rng.uniform_index(d - 1);
    if (j >= i) ++j;
    return {hinge, graph_->neighbor_at(hinge, i), graph_->neighbor_at(hinge, j)};
  }

 private:
  const Graph* graph_;
  std::vector<std::uint64_t> cumulative_;
};

WedgeSampler build_wedge_sampler(const Graph& g);

EstimateResult ws_estimate_from_wedges(const Graph& g, std::span<const Wedge> wedges,
                                       std::uint64_t total_wedges);

// Draws k wedges independently with replacement.
template <UniformSource S>
EstimateResult ws_estimate(const WedgeSampler& sampler, std::uint64_t k, S& rng) {
  const Graph& g = sampler.graph();
  std::uint64_t closed = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const Wedge w = sampler.draw(rng);
    if (g.has_edge(w.a, w.b)) ++closed;
  }
  EstimateResult r;
  r.method = Method::kWs;
  r.p_or_k = static_cast<double>(k);
  r.raw = closed;
  r.sampled = k;
  r.estimate = static_cast<double>(closed) * static_cast<double>(sampler.total_wedges()) /
               (3.0 * static_cast<double>(k));
  return r;
}

// Single-shot entry points. These fill seed and seconds.
EstimateResult ews_estimate(const Graph& g, double p, RandomSource& rng);
EstimateResult es_estimate(const Graph& g, double p, RandomSource& rng);
EstimateResult ws_estimate(const Graph& g, std::uint64_t k, RandomSource& rng);

// A validated plan bound to a graph, with per-graph preprocessing (the WS
// hinge table) done once. run() is const and safe to call concurrently
// with distinct RandomSources.
class Estimator {
 public:
  Estimator(const Graph& g, const SamplingPlan& plan);

  const SamplingPlan& plan() const { return plan_; }
  EstimateResult run(RandomSource& rng) const;

 private:
  const Graph* graph_;
  SamplingPlan plan_;
  std::optional<WedgeSampler> wedges_;
};

}  // namespace trisample

#endif  // TRISAMPLE_ESTIMATORS_HPP_
