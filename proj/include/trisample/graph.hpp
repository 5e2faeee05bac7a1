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

#ifndef TRISAMPLE_GRAPH_HPP_
#define TRISAMPLE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trisample {

using VertexId = std::uint32_t;
using SourceId = std::uint64_t;

// Canonical undirected edge, u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for a malformed edge-list line. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when no edge survives self-loop removal and deduplication.
class EmptyGraphError : public std::runtime_error {
 public:
  EmptyGraphError();
};

// Immutable undirected simple graph in CSR form. Every neighbor list is
// strictly ascending; vertex ids are dense in [0, n) and every vertex has
// degree >= 1 because vertices only arise from edges.
class Graph {
 public:
  // Builds a graph from raw id pairs using the loader's cleaning rules:
  // self-loops dropped, parallel/reversed edges collapsed, ids remapped
  // densely in order of first appearance.
  static Graph from_pairs(std::span<const std::pair<SourceId, SourceId>> pairs);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::size_t degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {neighbors_.data() + offsets_[u], degree(u)};
  }

  // i-th smallest neighbor of v; requires i < degree(v).
  VertexId neighbor_at(VertexId v, std::size_t i) const {
    return neighbors_[offsets_[v] + i];
  }

  // Binary search in the shorter of the two neighbor lists.
  bool has_edge(VertexId u, VertexId v) const;

  // Degree of the lower-degree endpoint.
  std::size_t low_degree(Edge e) const;

  // Endpoint that serves as the wedge hinge for `e`: the lower-degree
  // endpoint, the smaller id on a degree tie.
  VertexId hinge_of(Edge e) const;

  // All canonical edges ordered by (u, v).
  std::vector<Edge> canonical_edges() const;

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const VertexId> adjacency() const { return neighbors_; }
  std::span<const SourceId> original_ids() const { return original_ids_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<SourceId> original_ids_;
};

// Reads a SNAP-style edge list: '#' comment lines, blank lines ignored,
// otherwise exactly two non-negative integer tokens per line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::filesystem::path& path);

}  // namespace trisample

#endif  // TRISAMPLE_GRAPH_HPP_
