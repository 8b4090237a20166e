#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copnum/board.hpp"
#include "copnum/error.hpp"
#include "copnum/formations.hpp"
#include "copnum/oracle_strategies.hpp"

namespace copnum {

inline int octagon_width(int side_len) { return 3 * side_len - 2; }

// Centered octagon with eight sides of side_len squares each: in local
// coordinates i, j in [0, L] with L = 3 * side_len - 3, the squares with
// min(i, L - i) + min(j, L - j) >= side_len - 1.
inline std::vector<Vertex> octagon_region(int n, int side_len = 8) {
  if (side_len < 1) throw InvalidArgument("octagon side length must be positive");
  const int width = octagon_width(side_len);
  if (n < width)
    throw FitError("an octagon with side " + std::to_string(side_len) + " needs n >= " + std::to_string(width) +
                       ", got n = " + std::to_string(n),
                   width);
  const int L = width - 1;
  const int off = (n - width) / 2;
  std::vector<Vertex> out;
  for (int i = 0; i <= L; ++i)
    for (int j = 0; j <= L; ++j)
      if (std::min(i, L - i) + std::min(j, L - j) >= side_len - 1) out.push_back((off + i) * n + (off + j));
  return out;
}

// Most vertices any (k - 1) cops can guard on one line.
inline int coverage_threshold(int k) { return (k - 1) * (k - 2) + 1; }

struct EvasionRegion {
  int k = 0;
  int threshold = 0;
  std::vector<Vertex> region;         // ids on the n x n board
  std::vector<int> long_lines;        // |L_j| per direction
  std::optional<int> minimal_n;       // least n with a nonempty region and every |L_j| >= 2
  std::optional<int> robust_n;        // least n >= minimal_n whose region is closed under long lines
};

namespace detail {

struct RegionAt {
  std::vector<Vertex> region;
  std::vector<int> long_lines;
};

inline RegionAt region_at(const DirectionSet& dirs, int n, int threshold) {
  RegionAt out;
  std::vector<std::pair<long, long>> strip;
  for (const auto& d : dirs) {
    std::map<long, int> count;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) ++count[d.line_key({x, y})];
    int lines = 0;
    long lo = 0, hi = -1;
    for (auto [key, c] : count)
      if (c > threshold) {
        if (lines == 0) lo = key;
        hi = key;
        ++lines;
      }
    out.long_lines.push_back(lines);
    strip.emplace_back(lo, hi);
  }
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      bool in = true;
      for (std::size_t j = 0; j < dirs.size() && in; ++j) {
        long key = dirs[j].line_key({x, y});
        in = key >= strip[j].first && key <= strip[j].second;
      }
      if (in) out.region.push_back((x - 1) * n + (y - 1));
    }
  return out;
}

// Every region vertex sees more than `threshold` region vertices on each of its lines.
inline bool region_robust(const DirectionSet& dirs, int n, int threshold, const std::vector<Vertex>& region) {
  if (region.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(n) * n, 0);
  for (Vertex v : region) in[v] = 1;
  for (const auto& d : dirs) {
    std::map<long, int> count;
    for (Vertex v : region) ++count[d.line_key({v / n + 1, v % n + 1})];
    for (Vertex v : region)
      if (count[d.line_key({v / n + 1, v % n + 1})] <= threshold) return false;
  }
  return true;
}

}  // namespace detail

// Region used against k - 1 cops on the royal graph with the given directions.
inline EvasionRegion evasion_region(const DirectionSet& dirs, int n, std::optional<int> k = std::nullopt,
                                    int scan_limit = 200) {
  if (n < 2) throw InvalidArgument("evasion_region needs n >= 2");
  DirectionSet reduced = dirs.reduced();
  EvasionRegion out;
  out.k = k.value_or(static_cast<int>(reduced.size()));
  if (out.k < 1) throw InvalidArgument("k must be positive");
  out.threshold = coverage_threshold(out.k);
  auto here = detail::region_at(reduced, n, out.threshold);
  out.region = std::move(here.region);
  out.long_lines = std::move(here.long_lines);
  for (int m = 2; m <= scan_limit; ++m) {
    auto r = detail::region_at(reduced, m, out.threshold);
    bool lines_ok = std::all_of(r.long_lines.begin(), r.long_lines.end(), [](int c) { return c >= 2; });
    if (!lines_ok || r.region.empty()) continue;
    if (!out.minimal_n) out.minimal_n = m;
    if (detail::region_robust(reduced, m, out.threshold, r.region)) {
      out.robust_n = m;
      break;
    }
  }
  return out;
}

// Robber confined to the octagon; always steps to an unguarded octagon square when one exists.
class OctagonRobber final : public RegionRobber {
 public:
  explicit OctagonRobber(int side_len = 8) : RegionRobber("octagon", {}), side_(side_len) {}

 protected:
  void init(const BoardGraph& g) override {
    if (region_.empty()) region_ = octagon_region(g.n(), side_);
  }

 private:
  int side_;
};

// Robber confined to evasion_region for the board's own directions.
class EvasionRegionRobber final : public RegionRobber {
 public:
  EvasionRegionRobber() : RegionRobber("region", {}) {}

 protected:
  void init(const BoardGraph& g) override {
    if (!region_.empty()) return;
    if (g.mode() != Mode::royal) throw UnsupportedMode("the region robber needs a royal graph");
    region_ = evasion_region(g.dirs(), g.n()).region;
    if (region_.empty()) throw InvalidArgument("evasion region is empty on " + g.descriptor());
  }
};

// One cop per direction; cop i moves onto the robber's line in direction i,
// nearest the robber, or toward that line when it cannot reach it.
class RoyalGuardingCops final : public CopStrategy {
 public:
  explicit RoyalGuardingCops(int k) : k_(k) {
    if (k < 1) throw InvalidArgument("guarding cops need at least one cop");
  }

  std::string name() const override { return "guarding:" + std::to_string(k_); }
  int cop_count() const override { return k_; }
  bool history_free() const override { return true; }

  std::vector<Vertex> place(const BoardGraph& g) override {
    check(g);
    int m = (g.n() + 1) / 2;
    return std::vector<Vertex>(k_, g.id({m, m}));
  }

  std::vector<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber, const History&) override {
    check(g);
    const Graph& gr = g.graph();
    std::vector<Vertex> out(cops.begin(), cops.end());
    for (std::size_t i = 0; i < cops.size(); ++i)
      if (gr.reaches(cops[i], robber)) {
        out[i] = robber;
        return out;
      }
    Coord r = g.coord(robber);
    for (int i = 0; i < k_; ++i) {
      auto line = line_through(g, robber, g.dirs()[i]);
      line.erase(std::remove(line.begin(), line.end(), robber), line.end());
      std::sort(line.begin(), line.end());
      auto cheb = [&](Vertex v) {
        Coord c = g.coord(v);
        return std::max(std::abs(c.x - r.x), std::abs(c.y - r.y));
      };
      std::optional<Vertex> best;
      for (Vertex t : gr.closed(cops[i]))
        if (std::binary_search(line.begin(), line.end(), t) && (!best || cheb(t) < cheb(*best))) best = t;
      if (!best) {
        auto dist = bfs_distances(gr, line);
        for (Vertex t : gr.closed(cops[i])) {
          if (dist[t] < 0) continue;
          if (!best || dist[t] < dist[*best] || (dist[t] == dist[*best] && cheb(t) < cheb(*best))) best = t;
        }
      }
      if (best) out[i] = *best;
    }
    return out;
  }

 private:
  void check(const BoardGraph& g) const {
    if (g.mode() != Mode::royal) throw UnsupportedMode("guarding cops need a royal graph");
    if (static_cast<int>(g.dirs().size()) != k_)
      throw InvalidArgument("guarding cops need one cop per direction: " + std::to_string(g.dirs().size()) +
                            " directions, " + std::to_string(k_) + " cops");
  }

  int k_;
};

}  // namespace copnum
