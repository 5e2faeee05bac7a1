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

#include "trisample/exact_metrics.hpp"

#include <algorithm>
#include <numeric>

namespace trisample {

std::uint64_t EdgeTriangleCounts::sum() const {
  return std::accumulate(triangles.begin(), triangles.end(), std::uint64_t{0});
}

double GraphMetrics::triangles_per_edge() const {
  return m == 0 ? 0.0 : 3.0 * static_cast<double>(triangles) / static_cast<double>(m);
}

double GraphMetrics::phi_over_3delta() const {
  return triangles == 0 ? 0.0
                        : static_cast<double>(phi) / (3.0 * static_cast<double>(triangles));
}

double GraphMetrics::k_over_delta() const {
  return triangles == 0 ? 0.0
                        : static_cast<double>(shared_pairs) / static_cast<double>(triangles);
}

namespace {

struct OutEntry {
  std::uint32_t rank;  // rank of the head vertex
  std::uint32_t edge;  // canonical edge index
};

}  // namespace

TriangleCount count_triangles_exact(const Graph& g) {
  const std::size_t n = g.vertex_count();

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);

  TriangleCount result;
  result.per_edge.edges = g.canonical_edges();
  const auto& edges = result.per_edge.edges;
  result.per_edge.triangles.assign(edges.size(), 0);

  // Out-lists indexed by rank, each sorted by head rank.
  std::vector<std::size_t> out_offsets(n + 1, 0);
  for (const Edge& e : edges) {
    const auto low = std::min(rank[e.u], rank[e.v]);
    ++out_offsets[low + 1];
  }
  std::partial_sum(out_offsets.begin(), out_offsets.end(), out_offsets.begin());
  std::vector<OutEntry> out(edges.size());
  std::vector<std::size_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    auto ru = rank[edges[i].u];
    auto rv = rank[edges[i].v];
    if (ru > rv) std::swap(ru, rv);
    out[cursor[ru]++] = {rv, i};
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(out_offsets[r]),
              out.begin() + static_cast<std::ptrdiff_t>(out_offsets[r + 1]),
              [](const OutEntry& a, const OutEntry& b) { return a.rank < b.rank; });
  }

  auto& counts = result.per_edge.triangles;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const OutEntry* r_begin = out.data() + out_offsets[r];
    const OutEntry* r_end = out.data() + out_offsets[r + 1];
    for (const OutEntry* uv = r_begin; uv != r_end; ++uv) {
      // Intersect out(r) beyond uv with out(uv->rank).
      const OutEntry* a = uv + 1;
      const OutEntry* b = out.data() + out_offsets[uv->rank];
      const OutEntry* b_end = out.data() + out_offsets[uv->rank + 1];
      while (a != r_end && b != b_end) {
        if (a->rank < b->rank) {
          ++a;
        } else if (b->rank < a->rank) {
          ++b;
        } else {
          ++counts[uv->edge];
          ++counts[a->edge];
          ++counts[b->edge];
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  result.triangles = total;
  return result;
}

std::uint64_t brute_force_triangles(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::uint64_t total = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++total;
      }
    }
  }
  return total;
}

std::uint64_t wedge_count(const Graph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    total += d * (d - 1) / 2;
  }
  return total;
}

GraphMetrics compute_metrics(const Graph& g) {
  const TriangleCount tc = count_triangles_exact(g);
  GraphMetrics metrics;
  metrics.n = g.vertex_count();
  metrics.m = g.edge_count();
  metrics.triangles = tc.triangles;
  metrics.wedges = wedge_count(g);
  metrics.clustering = metrics.wedges == 0 ? 0.0
                                           : 3.0 * static_cast<double>(metrics.triangles) /
                                                 static_cast<double>(metrics.wedges);
  for (std::size_t i = 0; i < tc.per_edge.edges.size(); ++i) {
    const std::uint64_t t = tc.per_edge.triangles[i];
    if (t == 0) continue;
    metrics.phi += t * (g.low_degree(tc.per_edge.edges[i]) - 1);
    metrics.shared_pairs += t * (t - 1) / 2;
  }
  return metrics;
}

}  // namespace trisample
