#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "copnum/error.hpp"

namespace copnum {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(std::span<const std::uint64_t> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(std::span<std::uint64_t> row, std::size_t i) {
  row[i >> 6] |= std::uint64_t{1} << (i & 63);
}

// Simple undirected graph, immutable after construction. Keeps sorted open
// neighbor lists, sorted closed neighborhoods N[v] = {v} u N(v), and N[v] as
// a bit row for fast subset tests.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::span<const Edge> edges)
      : adj_(vertex_count), words_(words_for(vertex_count)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
          static_cast<std::size_t>(v) >= vertex_count) {
        throw InvalidArgument("edge endpoint out of range");
      }
      if (u == v) continue;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    closed_.resize(vertex_count);
    bits_.assign(vertex_count * words_, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      auto& c = closed_[v];
      c = a;
      c.insert(std::lower_bound(c.begin(), c.end(), static_cast<Vertex>(v)), static_cast<Vertex>(v));
      auto row = std::span<std::uint64_t>(bits_).subspan(v * words_, words_);
      for (Vertex w : c) set_bit(row, w);
    }
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t words() const { return words_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> closed(Vertex v) const { return closed_[v]; }
  std::span<const std::uint64_t> closed_row(Vertex v) const {
    return std::span<const std::uint64_t>(bits_).subspan(static_cast<std::size_t>(v) * words_, words_);
  }

  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  // u in N[v]
  bool reaches(Vertex v, Vertex u) const { return test_bit(closed_row(v), u); }
  bool adjacent(Vertex u, Vertex v) const { return u != v && reaches(u, v); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (auto& a : adj_) s += a.size();
    return s / 2;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> closed_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
};

// Connected components, largest first, ties by smallest member; members sorted.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{static_cast<Vertex>(s)};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

// Induced subgraph on `members` (sorted); vertex i of the result is members[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  std::vector<Vertex> local(g.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Vertex w : g.neighbors(members[i]))
      if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
  return Graph(members.size(), edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// A vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.size()) return false;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (Vertex v : g.neighbors(u))
      if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

}  // namespace copnum
