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

#include "trisample/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace trisample {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

EmptyGraphError::EmptyGraphError()
    : std::runtime_error("edge list contains no edges after cleaning") {}

Graph Graph::from_pairs(std::span<const std::pair<SourceId, SourceId>> pairs) {
  Graph g;
  std::unordered_map<SourceId, VertexId> dense;
  dense.reserve(pairs.size());
  auto intern = [&](SourceId id) {
    auto [it, inserted] =
        dense.try_emplace(id, static_cast<VertexId>(g.original_ids_.size()));
    if (inserted) {
      if (g.original_ids_.size() == std::numeric_limits<VertexId>::max()) {
        throw std::length_error("vertex count exceeds 32-bit id space");
      }
      g.original_ids_.push_back(id);
    }
    return it->second;
  };

  // Self-loops are skipped before interning so they never create an
  // isolated vertex.
  std::vector<std::uint64_t> packed;
  packed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u > v) std::swap(u, v);
    packed.push_back((std::uint64_t{u} << 32) | v);
  }
  if (packed.empty()) throw EmptyGraphError();
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  const std::size_t n = g.original_ids_.size();
  std::vector<std::size_t> degree(n, 0);
  for (std::uint64_t e : packed) {
    ++degree[e >> 32];
    ++degree[e & 0xffffffffu];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(packed.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v); each list receives its smaller neighbors
  // first and its larger neighbors afterwards, both ascending.
  for (std::uint64_t e : packed) {
    auto u = static_cast<VertexId>(e >> 32);
    auto v = static_cast<VertexId>(e & 0xffffffffu);
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::low_degree(Edge e) const {
  return std::min(degree(e.u), degree(e.v));
}

VertexId Graph::hinge_of(Edge e) const {
  const std::size_t du = degree(e.u);
  const std::size_t dv = degree(e.v);
  if (du != dv) return du < dv ? e.u : e.v;
  return std::min(e.u, e.v);
}

std::vector<Edge> Graph::canonical_edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    auto list = neighbors(u);
    auto first = std::upper_bound(list.begin(), list.end(), u);
    for (auto it = first; it != list.end(); ++it) edges.push_back({u, *it});
  }
  return edges;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

Graph load_edge_list(std::string_view text) {
  std::vector<std::pair<SourceId, SourceId>> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;

    SourceId ids[2];
    int tokens = 0;
    while (i < line.size()) {
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      std::string_view token = line.substr(i, j - i);
      if (tokens == 2) {
        throw ParseError(line_no, "expected 2 tokens, found more");
      }
      SourceId value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "not a non-negative integer: '" + std::string(token) + "'");
      }
      ids[tokens++] = value;
      i = j;
      while (i < line.size() && is_space(line[i])) ++i;
    }
    if (tokens != 2) throw ParseError(line_no, "expected 2 tokens, found 1");
    pairs.emplace_back(ids[0], ids[1]);
  }
  return Graph::from_pairs(pairs);
}

Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_edge_list(std::string_view(text));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

}  // namespace trisample
