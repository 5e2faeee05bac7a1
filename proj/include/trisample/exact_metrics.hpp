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

#ifndef TRISAMPLE_EXACT_METRICS_HPP_
#define TRISAMPLE_EXACT_METRICS_HPP_

#include <cstdint>
#include <vector>

#include "trisample/graph.hpp"

namespace trisample {

// Per-edge triangle counts T(e), aligned with Graph::canonical_edges().
struct EdgeTriangleCounts {
  std::vector<Edge> edges;
  std::vector<std::uint64_t> triangles;

  std::uint64_t sum() const;
};

struct TriangleCount {
  std::uint64_t triangles = 0;
  EdgeTriangleCounts per_edge;
};

// Exact counts and the derived columns of a dataset-features table.
struct GraphMetrics {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t triangles = 0;     // Δ
  std::uint64_t wedges = 0;        // Λ
  double clustering = 0.0;         // C = 3Δ/Λ, 0 when Λ = 0
  std::uint64_t phi = 0;           // Σ_t (σ(t) - 3)
  std::uint64_t shared_pairs = 0;  // K: pairs of triangles sharing an edge

  double triangles_per_edge() const;  // 3Δ/m
  double phi_over_3delta() const;     // 0 when Δ = 0
  double k_over_delta() const;        // 0 when Δ = 0
};

// Forward algorithm: each edge oriented toward the higher (degree, id) rank,
// out-lists intersected. O(m^{3/2}).
TriangleCount count_triangles_exact(const Graph& g);

// O(n^3) enumeration of vertex triples. Test oracle only.
std::uint64_t brute_force_triangles(const Graph& g);

// Σ_v d_v (d_v - 1) / 2.
std::uint64_t wedge_count(const Graph& g);

GraphMetrics compute_metrics(const Graph& g);

}  // namespace trisample

#endif  // TRISAMPLE_EXACT_METRICS_HPP_
