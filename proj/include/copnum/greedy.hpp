#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <string>
#include <vector>

#include "copnum/strategy.hpp"

namespace copnum {

// Size of the robber's reply set the greedy cops minimize on ties.
enum class TieMeasure {
  safe,       // replies no cop can reach next move
  available,  // |N[robber] minus cops|
  next,       // max over safe replies r of |N[r] minus cops|
};

inline TieMeasure parse_tie_measure(std::string_view s) {
  if (s == "safe") return TieMeasure::safe;
  if (s == "available") return TieMeasure::available;
  if (s == "next") return TieMeasure::next;
  throw InvalidArgument("unknown tie measure '" + std::string(s) + "'");
}

inline std::string_view to_string(TieMeasure m) {
  switch (m) {
    case TieMeasure::next: return "next";
    case TieMeasure::available: return "available";
    case TieMeasure::safe: return "safe";
  }
  return "?";
}

// Largest number of cops that can land on distinct squares of N[r] in one move.
inline int max_cops_into(const Graph& g, std::span<const Vertex> cops, Vertex r) {
  auto target = g.closed(r);
  std::vector<int> owner(target.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (seen[j] || !g.reaches(cops[i], target[j])) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t i = 0; i < cops.size(); ++i) {
    seen.assign(target.size(), 0);
    matched += augment(i);
  }
  return matched;
}

// Score the cops assign to a joint move: the largest short-line value among the
// robber's safe replies (0 if none, -1 for an immediate capture), then the
// tie measure.
struct GreedyKey {
  int f = 0;
  int tie = 0;
  bool revisit = false;
  auto operator<=>(const GreedyKey&) const = default;
};

struct GreedyOptions {
  TieMeasure tie = TieMeasure::safe;
  // Rank the unvisited preference ahead of the tie measure.
  bool unvisited_first = true;
};

class GreedyCops final : public CopStrategy {
 public:
  explicit GreedyCops(int k, GreedyOptions opts = {}) : k_(k), opts_(opts) {
    if (k < 1) throw InvalidArgument("greedy cops need at least one cop");
  }

  std::string name() const override { return "greedy:" + std::to_string(k_); }
  int cop_count() const override { return k_; }

  // A diagonal run of k squares centered at (m, m), m = ceil(n / 2).
  std::vector<Vertex> place(const BoardGraph& g) override {
    int m = (g.n() + 1) / 2;
    std::vector<Vertex> out;
    for (int i = 0; i < k_; ++i) {
      int p = std::clamp(m - (k_ - 1) / 2 + i, 1, g.n());
      out.push_back(g.id({p, p}));
    }
    return out;
  }

  std::vector<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                           const History& h) override {
    return choose(g, cops, robber, &h).first;
  }

  // Best joint move and its key.
  std::pair<std::vector<Vertex>, GreedyKey> choose(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                                                   const History* h) const {
    const Graph& gr = g.graph();
    const std::size_t w = gr.words();
    struct Reply {
      int phi;
      Vertex v;
    };
    std::vector<Reply> replies;
    for (Vertex v : gr.closed(robber)) replies.push_back({phi(g, v), v});
    std::sort(replies.begin(), replies.end(), [](const Reply& a, const Reply& b) {
      return a.phi != b.phi ? a.phi > b.phi : a.v < b.v;
    });

    const int k = static_cast<int>(cops.size());
    std::vector<std::vector<std::uint64_t>> prefix(k + 1, std::vector<std::uint64_t>(w, 0));
    std::vector<Vertex> cur(k), best;
    GreedyKey best_key;
    bool have = false, done = false;

    auto evaluate = [&]() {
      GreedyKey key;
      if (occupied(cur, robber)) {
        key = {-1, 0, false};
      } else {
        const auto& mask = prefix[k];
        key.f = 0;
        for (const auto& rep : replies)
          if (!test_bit(mask, rep.v) && !occupied(cur, rep.v)) {
            key.f = rep.phi;
            break;
          }
        if (have && key.f > best_key.f) return;
        key.tie = tie_value(gr, cur, robber, mask);
        key.revisit = h && h->visited(cur, robber);
      }
      if (!have || less(key, best_key)) {
        have = true;
        best_key = key;
        best = cur;
        if (key.f < 0) done = true;
      }
    };

    std::function<void(int)> rec = [&](int i) {
      if (done) return;
      if (i == k) {
        evaluate();
        return;
      }
      for (Vertex t : gr.closed(cops[i])) {
        cur[i] = t;
        auto row = gr.closed_row(t);
        for (std::size_t j = 0; j < w; ++j) prefix[i + 1][j] = prefix[i][j] | row[j];
        rec(i + 1);
        if (done) return;
      }
    };
    rec(0);
    return {best, best_key};
  }

  // The short-line value f(c, r) the cops attach to reply r after joint move c.
  static int reply_value(const BoardGraph& g, std::span<const Vertex> c, Vertex r) {
    if (occupied(c, r) || guarded(g.graph(), c, r)) return 0;
    return phi(g, r);
  }

 private:
  bool less(const GreedyKey& a, const GreedyKey& b) const {
    if (opts_.unvisited_first) return std::tuple(a.f, a.revisit, a.tie) < std::tuple(b.f, b.revisit, b.tie);
    return a < b;
  }

  int tie_value(const Graph& gr, std::span<const Vertex> c, Vertex robber, std::span<const std::uint64_t> mask) const {
    int out = 0;
    switch (opts_.tie) {
      case TieMeasure::available:
        for (Vertex v : gr.closed(robber)) out += !occupied(c, v);
        return out;
      case TieMeasure::safe:
        for (Vertex v : gr.closed(robber)) out += !test_bit(mask, v);
        return out;
      case TieMeasure::next:
        for (Vertex v : gr.closed(robber)) {
          if (test_bit(mask, v)) continue;
          int free = 0;
          for (Vertex u : gr.closed(v)) free += !occupied(c, u);
          out = std::max(out, free);
        }
        return out;
    }
    return out;
  }

  int k_;
  GreedyOptions opts_;
};

// Robber's score for standing on r with the cops at `cops` (cops to move next):
// unguarded squares score their short-line value, guarded ones lose outright.
struct RobberKey {
  int f = 0;
  int tie = 0;
  auto operator<=>(const RobberKey&) const = default;
};

inline RobberKey greedy_robber_key(const BoardGraph& g, std::span<const Vertex> cops, Vertex r) {
  const Graph& gr = g.graph();
  RobberKey key;
  key.f = guarded(gr, cops, r) ? INT_MIN : phi(g, r);
  key.tie = static_cast<int>(gr.closed(r).size()) - max_cops_into(gr, cops, r);
  return key;
}

class GreedyRobber final : public RobberStrategy {
 public:
  std::string name() const override { return "greedy"; }
  bool history_free() const override { return true; }

  Vertex place(const BoardGraph& g, std::span<const Vertex> cops) override {
    std::optional<Vertex> best;
    RobberKey best_key;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (occupied(cops, static_cast<Vertex>(v))) continue;
      auto key = greedy_robber_key(g, cops, static_cast<Vertex>(v));
      if (!best || key > best_key) {
        best = static_cast<Vertex>(v);
        best_key = key;
      }
    }
    return best ? *best : cops.front();
  }

  std::optional<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                             const History&) override {
    std::optional<Vertex> best;
    RobberKey best_key;
    for (Vertex v : g.graph().closed(robber)) {
      if (occupied(cops, v)) continue;
      auto key = greedy_robber_key(g, cops, v);
      if (!best || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    return best;
  }
};

}  // namespace copnum
