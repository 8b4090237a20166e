#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "copnum/codec.hpp"
#include "copnum/error.hpp"
#include "copnum/solution.hpp"

namespace copnum {

// Retrograde analysis with per-state escape counters.
//
// A cop turn is split into single-cop moves: a position is (U, M, r) with U
// the cops still to move this turn and M those that have moved, both sorted
// multisets. A cop may only move to a vertex >= max(M); every joint move is
// reachable by moving cops in order of their targets, so no joint move is
// lost and each position has O(k * deg) predecessors. Positions with U empty
// are robber-to-move; their counter holds the number of distinct non-capturing
// robber successors still unresolved.
//
// With symmetry enabled only the canonical representative (minimum packed
// index over the arena's automorphisms) of each position is stored.
class RetrogradeSolution final : public Solution {
 public:
  static std::pair<std::shared_ptr<RetrogradeSolution>, SolveResult> solve(const Arena& arena, int k,
                                                                          const SolveOptions& opts) {
    auto sol = std::shared_ptr<RetrogradeSolution>(new RetrogradeSolution(arena, k, opts.use_symmetry));
    if (sol->total_ > opts.state_budget)
      throw ResourceError("retrograde engine needs " + std::to_string(sol->total_) +
                          " positions, over the state budget of " + std::to_string(opts.state_budget));
    sol->run();

    SolveResult res;
    res.k = k;
    res.engine = "retrograde";
    res.state_count = logical_state_count(arena.size(), k);
    res.peak_memory_estimate = sol->total_ / 8 + sol->total_ * 2 + sol->block_size(0) * 2;

    std::vector<Vertex> m(k, 0);
    std::optional<int> best;
    do {
      int worst = 0;
      bool ok = true;
      for (std::size_t r = 0; r < arena.size() && ok; ++r) {
        auto d = sol->depth(m, static_cast<Vertex>(r));
        if (!d) ok = false;
        else worst = std::max(worst, *d);
      }
      if (ok && (!best || worst < *best)) {
        best = worst;
        std::vector<Vertex> labels;
        for (Vertex c : m) labels.push_back(arena.labels[c]);
        std::sort(labels.begin(), labels.end());
        res.optimal_start = std::move(labels);
      }
    } while (sol->ranker_.next(m));
    if (best) {
      res.cops_win = true;
      res.capture_time = best;
    }
    return {sol, res};
  }

  std::size_t vertex_count() const override { return v_; }
  int cop_count() const override { return k_; }
  bool complete() const override { return true; }
  bool has_depth() const override { return true; }

  bool cop_win(std::span<const Vertex> cops, Vertex robber) const override { return depth(cops, robber).has_value(); }

  std::optional<int> depth(std::span<const Vertex> cops, Vertex robber) const override {
    if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return 0;
    Pos p;
    p.u = k_;
    std::copy(cops.begin(), cops.end(), p.un.begin());
    std::sort(p.un.begin(), p.un.begin() + k_);
    p.r = robber;
    auto idx = canonical(p);
    if (!test_bit(win_, idx)) return std::nullopt;
    return value_[idx];
  }

 private:
  static constexpr int kMaxK = 8;

  struct Pos {
    int u = 0;  // unmoved count; moved count is k - u
    std::array<Vertex, kMaxK> un{};
    std::array<Vertex, kMaxK> mv{};
    Vertex r = 0;
  };

  RetrogradeSolution(const Arena& arena, int k, bool use_symmetry)
      : g_(&arena.graph), v_(arena.size()), k_(k), ranker_(arena.size(), k) {
    if (k > kMaxK) throw InvalidArgument("retrograde engine supports at most 8 cops");
    if (use_symmetry && arena.symmetries.size() > 1) syms_ = arena.symmetries;
    unsigned __int128 total = 0;
    offset_.resize(k + 2);
    for (int u = 0; u <= k; ++u) {
      offset_[u] = static_cast<std::uint64_t>(total);
      total += static_cast<unsigned __int128>(ranker_.count(u)) * ranker_.count(k - u) * v_;
    }
    offset_[k + 1] = total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                        : static_cast<std::uint64_t>(total);
    total_ = offset_[k + 1];
  }

  std::uint64_t block_size(int u) const { return offset_[u + 1] - offset_[u]; }

  std::uint64_t encode(const Pos& p) const {
    std::uint64_t ru = ranker_.rank(std::span<const Vertex>(p.un.data(), p.u));
    std::uint64_t rm = ranker_.rank(std::span<const Vertex>(p.mv.data(), k_ - p.u));
    return offset_[p.u] + (ru * ranker_.count(k_ - p.u) + rm) * v_ + static_cast<std::uint64_t>(p.r);
  }

  Pos decode(std::uint64_t idx) const {
    Pos p;
    int u = 0;
    while (idx >= offset_[u + 1]) ++u;
    idx -= offset_[u];
    p.u = u;
    p.r = static_cast<Vertex>(idx % v_);
    idx /= v_;
    std::uint64_t cm = ranker_.count(k_ - u);
    ranker_.unrank(idx / cm, std::span<Vertex>(p.un.data(), u));
    ranker_.unrank(idx % cm, std::span<Vertex>(p.mv.data(), k_ - u));
    return p;
  }

  std::uint64_t canonical(const Pos& p) const {
    std::uint64_t best = encode(p);
    for (std::size_t s = 1; s < syms_.size(); ++s) {
      const auto& perm = syms_[s];
      Pos q;
      q.u = p.u;
      for (int i = 0; i < p.u; ++i) q.un[i] = perm[p.un[i]];
      for (int i = 0; i < k_ - p.u; ++i) q.mv[i] = perm[p.mv[i]];
      std::sort(q.un.begin(), q.un.begin() + q.u);
      std::sort(q.mv.begin(), q.mv.begin() + (k_ - q.u));
      q.r = perm[p.r];
      best = std::min(best, encode(q));
    }
    return best;
  }

  bool robber_on_moved(const Pos& p) const {
    return std::find(p.mv.begin(), p.mv.begin() + (k_ - p.u), p.r) != p.mv.begin() + (k_ - p.u);
  }
  bool robber_on_unmoved(const Pos& p) const {
    return std::find(p.un.begin(), p.un.begin() + p.u, p.r) != p.un.begin() + p.u;
  }

  // Distinct canonical non-capturing successors of a robber-to-move position.
  std::vector<std::uint64_t> robber_successors(const Pos& p) const {
    std::vector<std::uint64_t> out;
    Pos q;
    q.u = k_;
    std::copy(p.mv.begin(), p.mv.begin() + k_, q.un.begin());
    for (Vertex r2 : g_->closed(p.r)) {
      if (std::find(p.mv.begin(), p.mv.begin() + k_, r2) != p.mv.begin() + k_) continue;
      q.r = r2;
      out.push_back(canonical(q));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Canonical predecessors of p, deduplicated.
  void predecessors(const Pos& p, std::vector<std::uint64_t>& out) const {
    out.clear();
    if (p.u == k_) {
      if (robber_on_unmoved(p)) return;
      Pos q;
      q.u = 0;
      std::copy(p.un.begin(), p.un.begin() + k_, q.mv.begin());
      for (Vertex r0 : g_->closed(p.r)) {
        if (std::find(p.un.begin(), p.un.begin() + k_, r0) != p.un.begin() + k_) continue;
        q.r = r0;
        out.push_back(canonical(q));
      }
    } else {
      int moved = k_ - p.u;
      Vertex last = p.mv[moved - 1];
      for (Vertex c : g_->closed(last)) {
        Pos q;
        q.u = p.u + 1;
        q.r = p.r;
        std::copy(p.un.begin(), p.un.begin() + p.u, q.un.begin());
        q.un[p.u] = c;
        std::sort(q.un.begin(), q.un.begin() + q.u);
        std::copy(p.mv.begin(), p.mv.begin() + moved - 1, q.mv.begin());
        out.push_back(canonical(q));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  void run() {
    win_.assign(words_for(total_), 0);
    value_.assign(total_, 0);
    counter_.assign(block_size(0), 0);

    std::vector<std::uint64_t> layer, next_layer;
    auto mark = [&](std::uint64_t idx, int value) {
      set_bit(win_, idx);
      value_[idx] = static_cast<std::uint16_t>(value);
    };

    // Seed robber-to-move positions: captures and forced moves onto a cop.
    for (std::uint64_t idx = offset_[0]; idx < offset_[1]; ++idx) {
      Pos p = decode(idx);
      if (!syms_.empty() && canonical(p) != idx) continue;
      if (robber_on_moved(p)) {
        mark(idx, 0);
        layer.push_back(idx);
        continue;
      }
      auto succ = robber_successors(p);
      counter_[idx - offset_[0]] = static_cast<std::uint16_t>(succ.size());
      if (succ.empty()) {
        mark(idx, 0);
        layer.push_back(idx);
      }
    }

    std::vector<std::uint64_t> preds;
    for (int d = 0; !layer.empty(); ++d) {
      if (d + 1 >= std::numeric_limits<std::uint16_t>::max()) throw ResourceError("capture depth exceeds 65534");
      for (std::size_t i = 0; i < layer.size(); ++i) {
        Pos p = decode(layer[i]);
        predecessors(p, preds);
        for (auto q : preds) {
          if (test_bit(win_, q)) continue;
          if (q < offset_[1]) {
            if (--counter_[q - offset_[0]] == 0) {
              mark(q, d);
              layer.push_back(q);
            }
          } else if (q >= offset_[k_]) {
            mark(q, d + 1);
            next_layer.push_back(q);
          } else {
            mark(q, d);
            layer.push_back(q);
          }
        }
      }
      layer.swap(next_layer);
      next_layer.clear();
    }
  }

  const Graph* g_;
  std::size_t v_;
  int k_;
  MultisetRanker ranker_;
  std::vector<Permutation> syms_;
  std::vector<std::uint64_t> offset_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> win_;
  std::vector<std::uint16_t> value_;
  std::vector<std::uint16_t> counter_;
};

}  // namespace copnum
