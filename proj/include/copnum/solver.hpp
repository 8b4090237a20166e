#pragma once

#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copnum/board.hpp"
#include "copnum/error.hpp"
#include "copnum/layered_engine.hpp"
#include "copnum/retrograde_engine.hpp"
#include "copnum/solution.hpp"
#include "json.hpp"

namespace copnum {

// Positions the retrograde engine handles in reasonable time; above this the
// automatic engine switches to the layered sweep.
inline constexpr std::uint64_t kRetrogradeAutoLimit = 400'000;

inline std::uint64_t retrograde_position_count(std::size_t v, int k) {
  MultisetRanker ranker(v, static_cast<std::size_t>(k));
  unsigned __int128 total = 0;
  for (int u = 0; u <= k; ++u) total += static_cast<unsigned __int128>(ranker.count(u)) * ranker.count(k - u) * v;
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                           : static_cast<std::uint64_t>(total);
}

struct SolveOutcome {
  SolveResult result;
  std::shared_ptr<const Solution> solution;
};

// Exact k-cop game value on a connected arena.
inline SolveOutcome solve_arena(const Arena& arena, int k, const SolveOptions& opts = {}) {
  if (k <= 0) throw InvalidArgument("cop count must be at least 1");
  if (k > opts.max_cops) throw InvalidArgument("cop count " + std::to_string(k) + " exceeds the configured maximum of " +
                                               std::to_string(opts.max_cops));
  if (arena.size() == 0) throw InvalidArgument("empty graph");
  if (connected_components(arena.graph).size() != 1) throw InvalidArgument("solve_k requires a connected graph");
  std::uint64_t logical = logical_state_count(arena.size(), k);
  if (logical > opts.state_budget)
    throw ResourceError("game has " + std::to_string(logical) + " states, over the state budget of " +
                        std::to_string(opts.state_budget));
  Engine engine = opts.engine;
  if (engine == Engine::automatic)
    engine = retrograde_position_count(arena.size(), k) <= kRetrogradeAutoLimit ? Engine::retrograde : Engine::layered;
  if (engine == Engine::retrograde) {
    auto [sol, res] = RetrogradeSolution::solve(arena, k, opts);
    return {res, sol};
  }
  auto [sol, res] = LayeredSolution::solve(arena, k, opts);
  return {res, sol};
}

inline SolveResult solve_k(const BoardGraph& g, int k, const SolveOptions& opts = {}) {
  return solve_arena(Arena::from_board(g), k, opts).result;
}

struct ComponentValue {
  std::vector<Vertex> members;
  std::optional<int> cop_number;  // nullopt: unresolved within budget
  std::optional<SolveResult> winning_solve;
  std::string note;
};

struct CopNumberReport {
  std::vector<ComponentValue> components;
  std::optional<int> additive_total;  // sum over components
  std::optional<int> max_component;   // value of the hardest component

  bool resolved() const { return additive_total.has_value(); }
};

inline ComponentValue component_cop_number(const BoardGraph& g, std::span<const Vertex> members,
                                           const SolveOptions& opts = {}) {
  ComponentValue cv;
  cv.members.assign(members.begin(), members.end());
  Arena arena = Arena::from_component(g, members);
  for (int k = 1; k <= opts.max_cops; ++k) {
    try {
      auto out = solve_arena(arena, k, opts);
      if (out.result.cops_win) {
        cv.cop_number = k;
        cv.winning_solve = out.result;
        return cv;
      }
    } catch (const ResourceError& e) {
      cv.note = e.what();
      return cv;
    }
  }
  cv.note = "no win with up to " + std::to_string(opts.max_cops) + " cops";
  return cv;
}

inline CopNumberReport cop_number(const BoardGraph& g, const SolveOptions& opts = {}) {
  CopNumberReport rep;
  int total = 0, worst = 0;
  bool all = true;
  for (const auto& comp : components(g)) {
    rep.components.push_back(component_cop_number(g, comp, opts));
    const auto& cv = rep.components.back();
    if (cv.cop_number) {
      total += *cv.cop_number;
      worst = std::max(worst, *cv.cop_number);
    } else {
      all = false;
    }
  }
  if (all) {
    rep.additive_total = total;
    rep.max_component = worst;
  }
  return rep;
}

// Optimal cops: from a cop-win position, move to a successor of strictly
// smaller capture depth.
class CopOracle {
 public:
  CopOracle(std::shared_ptr<const Arena> arena, std::shared_ptr<const Solution> sol)
      : arena_(std::move(arena)), sol_(std::move(sol)) {
    if (!sol_->has_depth()) throw DomainError("cop oracle needs a solve with strategy tracking");
  }

  const Arena& arena() const { return *arena_; }
  const Solution& solution() const { return *sol_; }

  bool defined_at(std::span<const Vertex> cops, Vertex robber) const { return sol_->cop_win(cops, robber); }

  // Joint move (one target per cop, same order as `cops`), local vertex ids.
  std::vector<Vertex> move(std::span<const Vertex> cops, Vertex robber) const {
    auto d = sol_->depth(cops, robber);
    if (!d) throw DomainError("cop oracle queried outside the cop-win region");
    const Graph& g = arena_->graph;
    const std::size_t k = cops.size();
    std::vector<std::size_t> choice(k, 0);
    std::vector<Vertex> cur(k), best;
    int best_value = std::numeric_limits<int>::max();
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) cur[i] = g.closed(cops[i])[choice[i]];
      int value = after_move_value(cur, robber);
      if (value < best_value) {
        best_value = value;
        best = cur;
        if (value <= *d - 1) break;
      }
      bool advanced = false;
      for (std::size_t i = k; i-- > 0;) {
        if (++choice[i] < g.closed(cops[i]).size()) {
          advanced = true;
          break;
        }
        choice[i] = 0;
      }
      if (!advanced) break;
    }
    return best;
  }

  // Remaining cop moves after the cops play `after` with the robber at `robber`.
  int after_move_value(std::span<const Vertex> after, Vertex robber) const {
    if (std::find(after.begin(), after.end(), robber) != after.end()) return 0;
    int worst = 0;
    for (Vertex r2 : arena_->graph.closed(robber)) {
      if (std::find(after.begin(), after.end(), r2) != after.end()) continue;
      auto d = sol_->depth(after, r2);
      if (!d) return std::numeric_limits<int>::max();
      worst = std::max(worst, *d);
    }
    return worst;
  }

 private:
  std::shared_ptr<const Arena> arena_;
  std::shared_ptr<const Solution> sol_;
};

// Optimal robber: stays outside the cop-win region when possible, otherwise
// maximizes the remaining capture depth.
class RobberOracle {
 public:
  RobberOracle(std::shared_ptr<const Arena> arena, std::shared_ptr<const Solution> sol)
      : arena_(std::move(arena)), sol_(std::move(sol)) {
    if (!sol_->complete()) throw DomainError("robber oracle needs a complete solve");
  }

  const Arena& arena() const { return *arena_; }

  Vertex place(std::span<const Vertex> cops) const {
    std::optional<Vertex> best;
    long best_score = -1;
    for (std::size_t r = 0; r < arena_->size(); ++r) {
      if (std::find(cops.begin(), cops.end(), static_cast<Vertex>(r)) != cops.end()) continue;
      long s = score(cops, static_cast<Vertex>(r));
      if (s > best_score) {
        best_score = s;
        best = static_cast<Vertex>(r);
      }
    }
    return best ? *best : cops.front();
  }

  // nullopt: every move lands on a cop.
  std::optional<Vertex> move(std::span<const Vertex> cops, Vertex robber) const {
    std::optional<Vertex> best;
    long best_score = -1;
    for (Vertex r2 : arena_->graph.closed(robber)) {
      if (std::find(cops.begin(), cops.end(), r2) != cops.end()) continue;
      long s = score(cops, r2);
      if (s > best_score) {
        best_score = s;
        best = r2;
      }
    }
    return best;
  }

 private:
  long score(std::span<const Vertex> cops, Vertex r) const {
    if (!sol_->cop_win(cops, r)) return std::numeric_limits<long>::max();
    if (!sol_->has_depth()) return 0;
    return *sol_->depth(cops, r);
  }

  std::shared_ptr<const Arena> arena_;
  std::shared_ptr<const Solution> sol_;
};

struct StrategyPair {
  SolveResult result;
  std::shared_ptr<const Arena> arena;
  CopOracle cops;
  RobberOracle robber;
};

inline StrategyPair extract_strategies(Arena arena, int k, SolveOptions opts = {}) {
  opts.track_strategy = true;
  auto shared = std::make_shared<const Arena>(std::move(arena));
  auto out = solve_arena(*shared, k, opts);
  return {out.result, shared, CopOracle(shared, out.solution), RobberOracle(shared, out.solution)};
}

inline StrategyPair extract_strategies(const BoardGraph& g, int k, SolveOptions opts = {}) {
  return extract_strategies(Arena::from_board(g), k, opts);
}

struct Dismantling {
  bool dismantlable = false;
  std::vector<Vertex> order;  // removed vertices, in removal order
};

// Repeatedly removes a vertex v whose closed neighborhood lies inside that
// of another remaining vertex.
inline Dismantling is_dismantlable(const Graph& g) {
  const std::size_t n = g.size(), w = g.words();
  std::vector<std::uint64_t> alive(w, 0);
  for (std::size_t v = 0; v < n; ++v) set_bit(alive, v);
  std::vector<char> removed(n, 0), queued(n, 1);
  std::deque<Vertex> work;
  for (std::size_t v = 0; v < n; ++v) work.push_back(static_cast<Vertex>(v));
  Dismantling out;
  std::size_t remaining = n;

  auto dominated = [&](Vertex v) {
    auto nv = g.closed_row(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      auto nu = g.closed_row(u);
      bool sub = true;
      for (std::size_t j = 0; j < w && sub; ++j) sub = ((nv[j] & alive[j]) & ~nu[j]) == 0;
      if (sub) return true;
    }
    return false;
  };

  while (!work.empty() && remaining > 1) {
    Vertex v = work.front();
    work.pop_front();
    queued[v] = 0;
    if (removed[v] || !dominated(v)) continue;
    removed[v] = 1;
    alive[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    --remaining;
    out.order.push_back(v);
    for (Vertex a : g.neighbors(v))
      for (Vertex b : g.closed(a))
        if (!removed[b] && !queued[b]) {
          queued[b] = 1;
          work.push_back(b);
        }
  }
  out.dismantlable = (remaining == 1);
  return out;
}

inline Dismantling is_dismantlable(const BoardGraph& g) { return is_dismantlable(g.graph()); }

inline nlohmann::json solve_result_to_json(const SolveResult& r, const BoardGraph* board = nullptr) {
  nlohmann::json j;
  j["k"] = r.k;
  j["copsWin"] = r.cops_win;
  if (r.optimal_start) {
    auto arr = nlohmann::json::array();
    for (Vertex v : *r.optimal_start) {
      if (board) {
        Coord c = board->coord(v);
        arr.push_back({c.x, c.y});
      } else {
        arr.push_back(v);
      }
    }
    j["optimalStart"] = std::move(arr);
  } else {
    j["optimalStart"] = nullptr;
  }
  j["captureTime"] = r.capture_time ? nlohmann::json(*r.capture_time) : nlohmann::json(nullptr);
  j["stateCount"] = r.state_count;
  return j;
}

}  // namespace copnum
