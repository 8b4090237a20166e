#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "copnum/oracle_strategies.hpp"
#include "copnum/strategy.hpp"

namespace copnum {

// Cops holding a rigid shape that slides across the board. A translation is
// playable when the cops can be matched to the shifted cells one move each.
class FormationCops : public CopStrategy {
 public:
  FormationCops(std::string name, std::vector<Coord> shape) : name_(std::move(name)), shape_(std::move(shape)) {}

  std::string name() const override { return name_; }
  int cop_count() const override { return static_cast<int>(shape_.size()); }

  std::vector<Vertex> place(const BoardGraph& g) override {
    if (!fits(g, anchor_for_center(g))) throw InvalidArgument(name_ + " does not fit on a board of size " + std::to_string(g.n()));
    return cells(g, anchor_for_center(g));
  }

  std::vector<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History& h) override {
    for (std::size_t i = 0; i < cops.size(); ++i)
      if (g.graph().reaches(cops[i], robber)) {
        std::vector<Vertex> out(cops.begin(), cops.end());
        out[i] = robber;
        return out;
      }
    if (auto special = endgame(g, cops, robber, h)) return *special;
    return slide(g, cops, robber, h);
  }

 protected:
  // Hook for strategies that leave the formation near the end.
  virtual std::optional<std::vector<Vertex>> endgame(const BoardGraph&, std::span<const Vertex>, Vertex, const History&) {
    return std::nullopt;
  }

  Coord anchor_for_center(const BoardGraph& g) const {
    int lo_x = INT_MAX, hi_x = INT_MIN, lo_y = INT_MAX, hi_y = INT_MIN;
    for (auto s : shape_) {
      lo_x = std::min(lo_x, s.x);
      hi_x = std::max(hi_x, s.x);
      lo_y = std::min(lo_y, s.y);
      hi_y = std::max(hi_y, s.y);
    }
    // Centers the shape's bounding box, rounding toward the lower corner.
    return {(g.n() + 1 - (hi_x - lo_x)) / 2 - lo_x, (g.n() + 1 - (hi_y - lo_y)) / 2 - lo_y};
  }

  bool fits(const BoardGraph& g, Coord a) const {
    for (auto s : shape_)
      if (!g.on_board({a.x + s.x, a.y + s.y})) return false;
    return true;
  }

  std::vector<Vertex> cells(const BoardGraph& g, Coord a) const {
    std::vector<Vertex> out;
    for (auto s : shape_) out.push_back(g.id({a.x + s.x, a.y + s.y}));
    return out;
  }

  // Current anchor, if the cops occupy some translate of the shape.
  std::optional<Coord> anchor_of(const BoardGraph& g, std::span<const Vertex> cops) const {
    std::vector<Vertex> have(cops.begin(), cops.end());
    std::sort(have.begin(), have.end());
    Coord c0 = g.coord(have.front());
    for (auto s0 : shape_) {
      Coord a{c0.x - s0.x, c0.y - s0.y};
      if (!fits(g, a)) continue;
      auto want = cells(g, a);
      std::sort(want.begin(), want.end());
      if (want == have) return a;
    }
    return std::nullopt;
  }

  // Assignment of cops to target cells reachable in one move, if any.
  static std::optional<std::vector<Vertex>> assign(const Graph& g, std::span<const Vertex> cops,
                                                   std::vector<Vertex> targets) {
    std::sort(targets.begin(), targets.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < cops.size() && ok; ++i) ok = g.reaches(cops[i], targets[i]);
      if (ok) return targets;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return std::nullopt;
  }

  // Chebyshev distance from v to the bounding box of the cells.
  static int box_distance(const BoardGraph& g, std::span<const Vertex> cells, Vertex v) {
    int lo_x = INT_MAX, hi_x = INT_MIN, lo_y = INT_MAX, hi_y = INT_MIN;
    for (Vertex c : cells) {
      Coord p = g.coord(c);
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    Coord r = g.coord(v);
    int dx = std::max({lo_x - r.x, 0, r.x - hi_x});
    int dy = std::max({lo_y - r.y, 0, r.y - hi_y});
    return std::max(dx, dy);
  }

  // Slide toward the robber: least box distance, then least summed graph
  // distance, then the robber's last step, then the lowest shift.
  std::vector<Vertex> slide(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History& h) const {
    auto anchor = anchor_of(g, cops);
    if (!anchor) return chase_move(g.graph(), cops, robber);
    std::vector<Vertex> src{robber};
    auto dist = bfs_distances(g.graph(), src);
    std::optional<Coord> mimic;
    if (h.last_robber_step) {
      Coord a = g.coord(h.last_robber_step->first), b = g.coord(h.last_robber_step->second);
      mimic = Coord{b.x - a.x, b.y - a.y};
    }
    std::optional<std::vector<Vertex>> best;
    std::array<long, 4> best_key{};
    for (int dx = -2; dx <= 2; ++dx)
      for (int dy = -2; dy <= 2; ++dy) {
        Coord a{anchor->x + dx, anchor->y + dy};
        if (!fits(g, a)) continue;
        auto target = cells(g, a);
        if (occupied(target, robber)) continue;
        auto moved = assign(g.graph(), cops, target);
        if (!moved) continue;
        long sum = 0;
        for (Vertex c : *moved) sum += dist[c] < 0 ? 1000 : dist[c];
        bool copies = mimic && mimic->x == dx && mimic->y == dy;
        std::array<long, 4> key{box_distance(g, *moved, robber), sum, copies ? 0 : 1, 0};
        if (!best || key < best_key) {
          best = moved;
          best_key = key;
        }
      }
    if (!best) return std::vector<Vertex>(cops.begin(), cops.end());
    return *best;
  }

  std::string name_;
  std::vector<Coord> shape_;
};

// Four cops on a 2 x 2 block at the center of the board.
class KnightSquareFormation final : public FormationCops {
 public:
  KnightSquareFormation() : FormationCops("square_formation:4", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {}
};

// Three cops on a diagonal of length three. Once the robber is inside the
// convex hull of the formation's neighborhood the exact 3-cop oracle takes
// over; without one the strategy stops as unresolved.
class KnightDiagonalFormation final : public FormationCops {
 public:
  explicit KnightDiagonalFormation(SolveOptions oracle_opts = {}, std::uint64_t oracle_budget = 100'000'000)
      : FormationCops("diagonal_formation:3", {{-1, -1}, {0, 0}, {1, 1}}),
        opts_(oracle_opts),
        oracle_budget_(oracle_budget) {}

  std::optional<std::string> unresolved() const override { return unresolved_; }

  std::vector<Vertex> place(const BoardGraph& g) override {
    auto start = FormationCops::place(g);
    std::uint64_t v = g.size();
    if (v * v * v * v <= oracle_budget_ && components(g).size() == 1) {
      try {
        oracle_.emplace(g, start.front(), 3, opts_);
      } catch (const ResourceError&) {
        oracle_.reset();
      }
    }
    return start;
  }

  bool has_oracle() const { return oracle_.has_value(); }

  // Lattice points inside the convex hull of the cops' closed neighborhoods.
  static bool in_hull(const BoardGraph& g, std::span<const Vertex> cops, Vertex v) {
    std::vector<Coord> pts;
    for (Vertex c : cops)
      for (Vertex u : g.graph().closed(c)) pts.push_back(g.coord(u));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](Coord o, Coord a, Coord b) {
      return static_cast<long>(a.x - o.x) * (b.y - o.y) - static_cast<long>(a.y - o.y) * (b.x - o.x);
    };
    std::vector<Coord> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
      while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
      hull[k++] = pts[i - 1];
    }
    hull.resize(k > 0 ? k - 1 : 0);
    Coord p = g.coord(v);
    if (hull.size() < 3) return std::find(pts.begin(), pts.end(), p) != pts.end();
    for (std::size_t i = 0; i < hull.size(); ++i)
      if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
    return true;
  }

 protected:
  std::optional<std::vector<Vertex>> endgame(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                                             const History&) override {
    if (!engaged_ && !in_hull(g, cops, robber)) return std::nullopt;
    if (!oracle_) {
      unresolved_ = "robber inside the formation hull and no exact 3-cop oracle within budget";
      return std::vector<Vertex>(cops.begin(), cops.end());
    }
    auto lc = oracle_->local(cops);
    Vertex lr = oracle_->arena().to_local(robber);
    if (!oracle_->cops().defined_at(lc, lr)) return std::nullopt;
    engaged_ = true;
    return oracle_->labels(oracle_->cops().move(lc, lr));
  }

 private:
  SolveOptions opts_;
  std::uint64_t oracle_budget_;
  std::optional<ComponentOracle> oracle_;
  std::optional<std::string> unresolved_;
  bool engaged_ = false;
};

// Knight 4-cycle a, a+(1,2), a+(3,1), a+(2,-1), as close to the center as fits.
inline std::vector<Vertex> knight_four_cycle(const BoardGraph& g) {
  if (g.n() < 4) throw InvalidArgument("a knight 4-cycle needs n >= 4");
  int base = (g.n() - 4) / 2;
  Coord a{base + 1, base + 2};
  return {g.id(a), g.id({a.x + 1, a.y + 2}), g.id({a.x + 3, a.y + 1}), g.id({a.x + 2, a.y - 1})};
}

// Robber that lives on a fixed 4-cycle and steps along it when threatened.
class FourCycleRobber final : public RobberStrategy {
 public:
  std::string name() const override { return "four_cycle"; }
  bool history_free() const override { return true; }

  Vertex place(const BoardGraph& g, std::span<const Vertex> cops) override {
    cycle_ = knight_four_cycle(g);
    for (Vertex v : cycle_)
      if (!guarded(g.graph(), cops, v)) return v;
    for (Vertex v : cycle_)
      if (!occupied(cops, v)) return v;
    return cycle_.front();
  }

  std::optional<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History&) override {
    if (cycle_.empty()) cycle_ = knight_four_cycle(g);
    const Graph& gr = g.graph();
    if (!guarded(gr, cops, robber)) return robber;
    for (Vertex v : cycle_)
      if (gr.adjacent(robber, v) && !guarded(gr, cops, v)) return v;
    for (Vertex v : gr.closed(robber))
      if (!guarded(gr, cops, v)) return v;
    for (Vertex v : gr.closed(robber))
      if (!occupied(cops, v)) return v;
    return std::nullopt;
  }

 private:
  std::vector<Vertex> cycle_;
};

// The 16 squares of the 4-regular induced knight subgraph on the 7 x 7 board,
// shifted toward the center of larger boards.
inline std::vector<Vertex> degree4_subgraph(const BoardGraph& g) {
  if (g.n() < 7) throw InvalidArgument("the degree-4 subgraph needs n >= 7");
  static const std::array<Coord, 16> base{{{2, 2}, {4, 1}, {6, 2}, {7, 4}, {6, 6}, {4, 7}, {2, 6}, {1, 4},
                                           {3, 3}, {4, 5}, {5, 3}, {3, 4}, {5, 5}, {4, 3}, {3, 5}, {5, 4}}};
  int s = (g.n() - 7) / 2;
  std::vector<Vertex> out;
  for (auto c : base) out.push_back(g.id({c.x + s, c.y + s}));
  std::sort(out.begin(), out.end());
  return out;
}

// Robber confined to a vertex set: prefers unguarded squares of the set with
// the most unguarded neighbors in the set, then the longer short line.
class RegionRobber : public RobberStrategy {
 public:
  RegionRobber(std::string name, std::vector<Vertex> region) : name_(std::move(name)), region_(std::move(region)) {
    std::sort(region_.begin(), region_.end());
  }

  std::string name() const override { return name_; }
  bool history_free() const override { return true; }
  const std::vector<Vertex>& region() const { return region_; }

  Vertex place(const BoardGraph& g, std::span<const Vertex> cops) override {
    init(g);
    std::optional<Vertex> best;
    std::array<int, 3> best_key{};
    for (Vertex v : region_) {
      if (occupied(cops, v)) continue;
      auto key = score(g, cops, v);
      if (!best || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    return best ? *best : region_.front();
  }

  std::optional<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History&) override {
    init(g);
    std::optional<Vertex> best;
    std::array<int, 3> best_key{};
    for (Vertex v : g.graph().closed(robber)) {
      if (occupied(cops, v)) continue;
      if (!std::binary_search(region_.begin(), region_.end(), v) && std::binary_search(region_.begin(), region_.end(), robber))
        continue;
      auto key = score(g, cops, v);
      if (!best || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    if (!best)
      for (Vertex v : g.graph().closed(robber))
        if (!occupied(cops, v)) return v;
    return best;
  }

 protected:
  virtual void init(const BoardGraph&) {}

  std::array<int, 3> score(const BoardGraph& g, std::span<const Vertex> cops, Vertex v) const {
    const Graph& gr = g.graph();
    int free = 0;
    for (Vertex u : gr.closed(v))
      if (std::binary_search(region_.begin(), region_.end(), u) && !guarded(gr, cops, u)) ++free;
    return {guarded(gr, cops, v) ? 0 : 1, free, phi(g, v)};
  }

  std::string name_;
  std::vector<Vertex> region_;
};

class Degree4Robber final : public RegionRobber {
 public:
  Degree4Robber() : RegionRobber("degree4_subgraph", {}) {}

 protected:
  void init(const BoardGraph& g) override {
    if (region_.empty()) region_ = degree4_subgraph(g);
  }
};

}  // namespace copnum
