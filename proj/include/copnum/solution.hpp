#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "copnum/board.hpp"
#include "copnum/codec.hpp"
#include "copnum/graph.hpp"

namespace copnum {

// A connected game graph with its symmetry group and a label per vertex
// (the board vertex id when the arena came from a board component).
struct Arena {
  Graph graph;
  std::vector<Permutation> symmetries;  // always starts with the identity
  std::vector<Vertex> labels;

  std::size_t size() const { return graph.size(); }

  // Local vertex for a label, or -1 when the label is not in this arena.
  Vertex to_local(Vertex label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<Vertex>(it - labels.begin());
  }

  static Arena from_graph(Graph g, std::vector<Permutation> syms = {}) {
    Arena a;
    a.labels.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) a.labels[i] = static_cast<Vertex>(i);
    Permutation id(a.labels);
    a.symmetries.push_back(id);
    for (auto& p : syms)
      if (p != id) a.symmetries.push_back(std::move(p));
    a.graph = std::move(g);
    return a;
  }

  // Induced component of a board; keeps the board symmetries that fix it.
  static Arena from_component(const BoardGraph& b, std::span<const Vertex> members) {
    Arena a;
    a.graph = induced_subgraph(b.graph(), members);
    a.labels.assign(members.begin(), members.end());
    std::vector<Vertex> local(b.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
    for (const auto& s : board_automorphisms(b)) {
      Permutation p(members.size());
      bool ok = true;
      for (std::size_t i = 0; i < members.size() && ok; ++i) {
        Vertex img = local[b.id(s.apply(b.coord(members[i]), b.n()))];
        if (img < 0) ok = false;
        else p[i] = img;
      }
      if (ok && std::find(a.symmetries.begin(), a.symmetries.end(), p) == a.symmetries.end())
        a.symmetries.push_back(std::move(p));
    }
    return a;
  }

  // The whole board as one arena (callers split disconnected boards first).
  static Arena from_board(const BoardGraph& b) {
    std::vector<Vertex> all(b.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
    return from_component(b, all);
  }
};

enum class Engine { automatic, retrograde, layered };

inline std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::retrograde: return "retrograde";
    case Engine::layered: return "layered";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 31;
inline constexpr int kDefaultMaxCops = 4;

// COPNUM_STATE_BUDGET overrides the default budget when set.
inline std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("COPNUM_STATE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateBudget;
}

struct SolveOptions {
  bool use_symmetry = true;
  bool track_strategy = false;
  Engine engine = Engine::automatic;
  std::uint64_t state_budget = default_state_budget();
  unsigned threads = 1;
  int max_cops = kDefaultMaxCops;
};

struct SolveResult {
  int k = 0;
  bool cops_win = false;
  std::optional<std::vector<Vertex>> optimal_start;  // arena labels, sorted
  std::optional<int> capture_time;                    // cop moves under optimal play
  std::uint64_t state_count = 0;                      // sorted-cop states x robber x side
  std::uint64_t peak_memory_estimate = 0;             // bytes
  std::string engine;

  bool operator==(const SolveResult&) const = default;
};

// Exact game values for positions with the cops to move.
class Solution {
 public:
  virtual ~Solution() = default;

  virtual std::size_t vertex_count() const = 0;
  virtual int cop_count() const = 0;
  // False when the engine stopped early (no strategy tracking).
  virtual bool complete() const = 0;
  virtual bool has_depth() const = 0;
  virtual bool cop_win(std::span<const Vertex> cops, Vertex robber) const = 0;
  // Cop moves until capture under optimal play; nullopt when the robber escapes.
  virtual std::optional<int> depth(std::span<const Vertex> cops, Vertex robber) const = 0;
};

inline std::uint64_t logical_state_count(std::size_t vertices, int k) {
  return StateCodec(vertices, static_cast<std::size_t>(k)).state_count();
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n < 1024) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace copnum
