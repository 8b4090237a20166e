#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/error.hpp"
#include "copnum/graph.hpp"

namespace copnum {

// Board square, 1-indexed: x is the file, y the rank.
struct Coord {
  int x = 0;
  int y = 0;
  auto operator<=>(const Coord&) const = default;
};

// A lattice direction. The stored (dx, dy) is primitive and sign-canonical so
// that d and -d compare equal; `step` keeps the raw vector (sign-canonical
// but not reduced) for animal "nearest lattice point" adjacency.
class Direction {
 public:
  Direction() = default;

  Direction(int dx, int dy) {
    if (dx == 0 && dy == 0) throw InvalidArgument("direction must be nonzero");
    if (dx < 0 || (dx == 0 && dy < 0)) {
      dx = -dx;
      dy = -dy;
    }
    step_dx_ = dx;
    step_dy_ = dy;
    int g = std::gcd(std::abs(dx), std::abs(dy));
    dx_ = dx / g;
    dy_ = dy / g;
  }

  int dx() const { return dx_; }
  int dy() const { return dy_; }
  int step_dx() const { return step_dx_; }
  int step_dy() const { return step_dy_; }
  bool primitive_step() const { return dx_ == step_dx_ && dy_ == step_dy_; }

  Direction reduced() const { return Direction(dx_, dy_); }

  // Constant along every line with this direction.
  long line_key(Coord c) const { return static_cast<long>(dy_) * c.x - static_cast<long>(dx_) * c.y; }

  auto operator<=>(const Direction& o) const {
    if (auto c = dx_ <=> o.dx_; c != 0) return c;
    if (auto c = dy_ <=> o.dy_; c != 0) return c;
    if (auto c = step_dx_ <=> o.step_dx_; c != 0) return c;
    return step_dy_ <=> o.step_dy_;
  }
  bool operator==(const Direction&) const = default;

 private:
  int dx_ = 1, dy_ = 0;
  int step_dx_ = 1, step_dy_ = 0;
};

class DirectionSet {
 public:
  DirectionSet() = default;

  // Throws on an empty set or on two distinct steps along the same direction.
  explicit DirectionSet(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {
    if (dirs_.empty()) throw InvalidArgument("direction set must be nonempty");
    std::sort(dirs_.begin(), dirs_.end());
    dirs_.erase(std::unique(dirs_.begin(), dirs_.end()), dirs_.end());
    for (std::size_t i = 1; i < dirs_.size(); ++i)
      if (dirs_[i].dx() == dirs_[i - 1].dx() && dirs_[i].dy() == dirs_[i - 1].dy())
        throw InvalidArgument("two steps along the same direction");
  }

  DirectionSet(std::initializer_list<std::pair<int, int>> vs) : DirectionSet(from_pairs(vs)) {}

  std::size_t size() const { return dirs_.size(); }
  const std::vector<Direction>& dirs() const { return dirs_; }
  auto begin() const { return dirs_.begin(); }
  auto end() const { return dirs_.end(); }
  const Direction& operator[](std::size_t i) const { return dirs_[i]; }

  DirectionSet reduced() const {
    std::vector<Direction> r;
    for (auto& d : dirs_) r.push_back(d.reduced());
    return DirectionSet(std::move(r));
  }

  bool operator==(const DirectionSet&) const = default;

 private:
  static std::vector<Direction> from_pairs(std::initializer_list<std::pair<int, int>> vs) {
    std::vector<Direction> out;
    for (auto [dx, dy] : vs) out.emplace_back(dx, dy);
    return out;
  }

  std::vector<Direction> dirs_;
};

// Parses "dx,dy;dx,dy;...".
inline DirectionSet parse_directions(std::string_view text) {
  std::vector<Direction> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto comma = item.find(',');
      if (comma == std::string_view::npos) throw InvalidArgument("direction '" + std::string(item) + "' is not dx,dy");
      try {
        std::size_t used_a = 0, used_b = 0;
        std::string a(item.substr(0, comma)), b(item.substr(comma + 1));
        int dx = std::stoi(a, &used_a), dy = std::stoi(b, &used_b);
        auto rest_ok = [](const std::string& s, std::size_t used) {
          return s.find_first_not_of(' ', used) == std::string::npos;
        };
        if (!rest_ok(a, used_a) || !rest_ok(b, used_b)) throw std::invalid_argument("trailing");
        out.emplace_back(dx, dy);
      } catch (const InvalidArgument&) {
        throw;
      } catch (const std::exception&) {
        throw InvalidArgument("direction '" + std::string(item) + "' is not dx,dy");
      }
    }
    pos = end + 1;
  }
  return DirectionSet(std::move(out));
}

enum class Mode { royal, animal };

inline std::string_view to_string(Mode m) { return m == Mode::royal ? "royal" : "animal"; }

enum class Piece { king, knight, rook, bishop, queen };

inline Piece parse_piece(std::string_view s) {
  if (s == "king") return Piece::king;
  if (s == "knight") return Piece::knight;
  if (s == "rook") return Piece::rook;
  if (s == "bishop") return Piece::bishop;
  if (s == "queen") return Piece::queen;
  throw InvalidArgument("unknown piece '" + std::string(s) + "'");
}

inline std::string_view to_string(Piece p) {
  switch (p) {
    case Piece::king: return "king";
    case Piece::knight: return "knight";
    case Piece::rook: return "rook";
    case Piece::bishop: return "bishop";
    case Piece::queen: return "queen";
  }
  return "?";
}

// One of the 8 dihedral symmetries of the square, acting on centered
// coordinates u = 2x - (n+1), v = 2y - (n+1) by the matrix [[a, b], [c, d]].
struct Symmetry {
  int a = 1, b = 0, c = 0, d = 1;
  std::string_view name = "identity";

  Coord apply(Coord p, int n) const {
    int u = 2 * p.x - (n + 1), v = 2 * p.y - (n + 1);
    int u2 = a * u + b * v, v2 = c * u + d * v;
    return {(u2 + n + 1) / 2, (v2 + n + 1) / 2};
  }
  std::pair<int, int> apply_vector(int dx, int dy) const { return {a * dx + b * dy, c * dx + d * dy}; }
};

inline const std::array<Symmetry, 8>& dihedral_group() {
  static const std::array<Symmetry, 8> group{{
      {1, 0, 0, 1, "identity"},
      {0, -1, 1, 0, "rot90"},
      {-1, 0, 0, -1, "rot180"},
      {0, 1, -1, 0, "rot270"},
      {-1, 0, 0, 1, "mirror_x"},
      {1, 0, 0, -1, "mirror_y"},
      {0, 1, 1, 0, "transpose"},
      {0, -1, -1, 0, "antitranspose"},
  }};
  return group;
}

// Immutable n x n lattice graph. Vertex id of (x, y) is (x-1)*n + (y-1).
class BoardGraph {
 public:
  BoardGraph(int n, Mode mode, DirectionSet dirs) : n_(n), mode_(mode), dirs_(std::move(dirs)) {
    if (n < 1) throw InvalidArgument("board size must be positive");
    if (mode_ == Mode::royal) dirs_ = dirs_.reduced();
    std::vector<Edge> edges;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        Vertex u = id({x, y});
        for (const auto& d : dirs_) {
          if (mode_ == Mode::animal) {
            Coord w{x + d.step_dx(), y + d.step_dy()};
            if (on_board(w)) edges.emplace_back(u, id(w));
          } else {
            for (Coord w{x + d.dx(), y + d.dy()}; on_board(w); w = {w.x + d.dx(), w.y + d.dy()})
              edges.emplace_back(u, id(w));
          }
        }
      }
    graph_ = Graph(static_cast<std::size_t>(n) * n, edges);
  }

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const DirectionSet& dirs() const { return dirs_; }
  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }

  bool on_board(Coord c) const { return c.x >= 1 && c.y >= 1 && c.x <= n_ && c.y <= n_; }
  Vertex id(Coord c) const { return (c.x - 1) * n_ + (c.y - 1); }
  Coord coord(Vertex v) const { return {v / n_ + 1, v % n_ + 1}; }

  std::string descriptor() const {
    std::string s = std::string(to_string(mode_)) + " n=" + std::to_string(n_) + " dirs=";
    bool first = true;
    for (auto& d : dirs_) {
      if (!first) s += ';';
      first = false;
      s += std::to_string(d.step_dx()) + "," + std::to_string(d.step_dy());
    }
    return s;
  }

 private:
  int n_;
  Mode mode_;
  DirectionSet dirs_;
  Graph graph_;
};

inline BoardGraph build_royal(int n, const DirectionSet& dirs) { return BoardGraph(n, Mode::royal, dirs); }

inline BoardGraph build_animal(int n, const DirectionSet& steps) { return BoardGraph(n, Mode::animal, steps); }

inline const DirectionSet& queen_directions() {
  static const DirectionSet d{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  return d;
}

inline const DirectionSet& knight_steps() {
  static const DirectionSet d{{1, 2}, {2, 1}, {2, -1}, {1, -2}};
  return d;
}

inline BoardGraph preset(Piece piece, int n) {
  switch (piece) {
    case Piece::king: return build_animal(n, queen_directions());
    case Piece::knight: return build_animal(n, knight_steps());
    case Piece::rook: return build_royal(n, DirectionSet{{1, 0}, {0, 1}});
    case Piece::bishop: return build_royal(n, DirectionSet{{1, 1}, {1, -1}});
    case Piece::queen: return build_royal(n, queen_directions());
  }
  throw InvalidArgument("unknown piece");
}

inline std::vector<std::vector<Vertex>> components(const BoardGraph& g) { return connected_components(g.graph()); }

// Full line of lattice points through v in direction d, ordered along d.
inline std::vector<Vertex> line_through(const BoardGraph& g, Vertex v, const Direction& d) {
  Coord c = g.coord(v);
  Coord s = c;
  while (g.on_board({s.x - d.dx(), s.y - d.dy()})) s = {s.x - d.dx(), s.y - d.dy()};
  std::vector<Vertex> line;
  for (; g.on_board(s); s = {s.x + d.dx(), s.y + d.dy()}) line.push_back(g.id(s));
  return line;
}

// For each direction of a royal graph, the line through v (in dirs() order).
inline std::vector<std::vector<Vertex>> lines_through(const BoardGraph& g, Vertex v) {
  if (g.mode() != Mode::royal) throw UnsupportedMode("lines_through requires a royal graph");
  std::vector<std::vector<Vertex>> out;
  for (const auto& d : g.dirs()) out.push_back(line_through(g, v, d));
  return out;
}

inline std::map<std::pair<int, int>, std::vector<Vertex>> lines_by_direction(const BoardGraph& g, Vertex v) {
  auto lines = lines_through(g, v);
  std::map<std::pair<int, int>, std::vector<Vertex>> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out[{g.dirs()[i].dx(), g.dirs()[i].dy()}] = std::move(lines[i]);
  return out;
}

// Dihedral symmetries mapping the direction set (or animal step set) onto itself.
inline std::vector<Symmetry> board_automorphisms(const BoardGraph& g) {
  std::vector<Symmetry> out;
  for (const auto& s : dihedral_group()) {
    std::vector<Direction> mapped;
    for (const auto& d : g.dirs()) {
      auto [dx, dy] = s.apply_vector(d.step_dx(), d.step_dy());
      mapped.emplace_back(dx, dy);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == g.dirs().dirs()) out.push_back(s);
  }
  return out;
}

inline Permutation vertex_permutation(const BoardGraph& g, const Symmetry& s) {
  Permutation p(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) p[v] = g.id(s.apply(g.coord(static_cast<Vertex>(v)), g.n()));
  return p;
}

inline std::string format_coord(Coord c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

}  // namespace copnum
