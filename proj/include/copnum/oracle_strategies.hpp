#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copnum/solver.hpp"
#include "copnum/strategy.hpp"

namespace copnum {

// BFS distances from a set of sources; -1 where unreachable.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.size(), -1);
  std::deque<Vertex> q;
  for (Vertex s : sources)
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  return dist;
}

// Each cop steps to the neighbor closest to the robber (ties: lowest id).
inline std::vector<Vertex> chase_move(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  std::vector<Vertex> src{robber};
  auto dist = bfs_distances(g, src);
  std::vector<Vertex> out;
  for (Vertex c : cops) {
    Vertex best = c;
    for (Vertex t : g.closed(c))
      if (dist[t] >= 0 && (dist[best] < 0 || dist[t] < dist[best])) best = t;
    out.push_back(best);
  }
  return out;
}

// Vertex of least eccentricity in the largest component (ties: lowest id).
inline Vertex central_vertex(const BoardGraph& b) {
  const auto comps = components(b);
  Vertex best = comps.front().front();
  int best_ecc = -1;
  for (Vertex v : comps.front()) {
    std::vector<Vertex> src{v};
    auto d = bfs_distances(b.graph(), src);
    int ecc = *std::max_element(d.begin(), d.end());
    if (best_ecc < 0 || ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

// Exact k-cop strategy for one component of a board, solved on first use.
class ComponentOracle {
 public:
  ComponentOracle(const BoardGraph& b, Vertex member, int k, SolveOptions opts) {
    for (const auto& comp : components(b))
      if (std::binary_search(comp.begin(), comp.end(), member)) {
        opts.track_strategy = true;
        auto sp = extract_strategies(Arena::from_component(b, comp), k, opts);
        result_ = sp.result;
        arena_ = sp.arena;
        cops_.emplace(std::move(sp.cops));
        robber_.emplace(std::move(sp.robber));
        return;
      }
  }

  const SolveResult& result() const { return result_; }
  const Arena& arena() const { return *arena_; }
  const CopOracle& cops() const { return *cops_; }
  const RobberOracle& robber() const { return *robber_; }

  bool contains(Vertex label) const { return arena_->to_local(label) >= 0; }
  bool contains_all(std::span<const Vertex> labels) const {
    for (Vertex v : labels)
      if (!contains(v)) return false;
    return true;
  }
  std::vector<Vertex> local(std::span<const Vertex> labels) const {
    std::vector<Vertex> out;
    for (Vertex v : labels) out.push_back(arena_->to_local(v));
    return out;
  }
  std::vector<Vertex> labels(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(arena_->labels[v]);
    return out;
  }

 private:
  SolveResult result_;
  std::shared_ptr<const Arena> arena_;
  std::optional<CopOracle> cops_;
  std::optional<RobberOracle> robber_;
};

// Optimal cops where the exact solve says they win; a shortest-path chase elsewhere.
class OracleCops final : public CopStrategy {
 public:
  OracleCops(int k, SolveOptions opts = {}) : k_(k), opts_(opts) {
    if (k < 1) throw InvalidArgument("oracle cops need at least one cop");
  }

  std::string name() const override { return "oracle:" + std::to_string(k_); }
  int cop_count() const override { return k_; }
  bool history_free() const override { return true; }

  std::vector<Vertex> place(const BoardGraph& g) override {
    Vertex center = central_vertex(g);
    oracle_.emplace(g, center, k_, opts_);
    if (oracle_->result().optimal_start) return *oracle_->result().optimal_start;
    return std::vector<Vertex>(k_, center);
  }

  std::vector<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History&) override {
    if (!oracle_) oracle_.emplace(g, cops.front(), k_, opts_);
    if (oracle_->contains_all(cops) && oracle_->contains(robber)) {
      auto lc = oracle_->local(cops);
      Vertex lr = oracle_->arena().to_local(robber);
      if (oracle_->cops().defined_at(lc, lr)) return oracle_->labels(oracle_->cops().move(lc, lr));
    }
    return chase_move(g.graph(), cops, robber);
  }

 private:
  int k_;
  SolveOptions opts_;
  std::optional<ComponentOracle> oracle_;
};

// Optimal robber against the given number of cops.
class OracleRobber final : public RobberStrategy {
 public:
  explicit OracleRobber(SolveOptions opts = {}) : opts_(opts) {}

  std::string name() const override { return "oracle"; }
  bool history_free() const override { return true; }

  Vertex place(const BoardGraph& g, std::span<const Vertex> cops) override {
    // A component free of cops is a permanent refuge.
    for (const auto& comp : components(g)) {
      bool free = true;
      for (Vertex c : cops) free = free && !std::binary_search(comp.begin(), comp.end(), c);
      if (free) return comp.front();
    }
    oracle_.emplace(g, cops.front(), static_cast<int>(cops.size()), opts_);
    if (!oracle_->contains_all(cops)) return fallback_place(g, cops);
    return oracle_->arena().labels[oracle_->robber().place(oracle_->local(cops))];
  }

  std::optional<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                             const History&) override {
    if (!oracle_ || !oracle_->contains(robber) || !oracle_->contains_all(cops)) {
      for (Vertex v : g.graph().closed(robber))
        if (!guarded(g.graph(), cops, v)) return v;
      for (Vertex v : g.graph().closed(robber))
        if (!occupied(cops, v)) return v;
      return std::nullopt;
    }
    auto m = oracle_->robber().move(oracle_->local(cops), oracle_->arena().to_local(robber));
    if (!m) return std::nullopt;
    return oracle_->arena().labels[*m];
  }

 private:
  static Vertex fallback_place(const BoardGraph& g, std::span<const Vertex> cops) {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (!guarded(g.graph(), cops, static_cast<Vertex>(v))) return static_cast<Vertex>(v);
    return cops.front();
  }

  SolveOptions opts_;
  std::optional<ComponentOracle> oracle_;
};

}  // namespace copnum
