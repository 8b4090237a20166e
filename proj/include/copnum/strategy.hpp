#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "copnum/board.hpp"
#include "copnum/error.hpp"
#include "json.hpp"

namespace copnum {

// Length of the shorter diagonal through (x, y) on an n x n board.
inline int phi(int n, Coord v) {
  return std::min(n - std::abs(v.x - v.y), n - std::abs(v.x + v.y - (n + 1)));
}

// Shortest line through v over the board's directions; the diagonal formula
// above for animal boards, where lines are not defined.
inline int phi(const BoardGraph& g, Vertex v) {
  if (g.mode() == Mode::animal) return phi(g.n(), g.coord(v));
  int best = g.n();
  for (const auto& d : g.dirs()) best = std::min(best, static_cast<int>(line_through(g, v, d).size()));
  return best;
}

// Robber-to-move positions seen so far (sorted cops, then the robber).
class History {
 public:
  static std::vector<Vertex> key(std::span<const Vertex> cops, Vertex robber) {
    std::vector<Vertex> k(cops.begin(), cops.end());
    std::sort(k.begin(), k.end());
    k.push_back(robber);
    return k;
  }

  bool visited(std::span<const Vertex> cops, Vertex robber) const { return seen_.count(key(cops, robber)) > 0; }
  void record(std::span<const Vertex> cops, Vertex robber) { seen_.insert(key(cops, robber)); }

  int turn = 0;
  // Robber's previous and current square, when it has moved at least once.
  std::optional<std::pair<Vertex, Vertex>> last_robber_step;

 private:
  std::set<std::vector<Vertex>> seen_;
};

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual int cop_count() const = 0;
  // Whether moves depend only on the current position.
  virtual bool history_free() const { return false; }
  virtual std::vector<Vertex> place(const BoardGraph& g) = 0;
  // One target per cop, in the same order as `cops`.
  virtual std::vector<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                                   const History& h) = 0;
  // Set when the strategy gave up without a defined move.
  virtual std::optional<std::string> unresolved() const { return std::nullopt; }
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual bool history_free() const { return false; }
  virtual Vertex place(const BoardGraph& g, std::span<const Vertex> cops) = 0;
  // nullopt: surrender (every square of N[robber] is taken by a cop).
  virtual std::optional<Vertex> move(const BoardGraph& g, std::span<const Vertex> cops, Vertex robber,
                                     const History& h) = 0;
};

inline bool occupied(std::span<const Vertex> cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

// Union of the cops' closed neighborhoods as a bit row.
inline std::vector<std::uint64_t> guard_mask(const Graph& g, std::span<const Vertex> cops) {
  std::vector<std::uint64_t> m(g.words(), 0);
  for (Vertex c : cops) {
    auto row = g.closed_row(c);
    for (std::size_t j = 0; j < m.size(); ++j) m[j] |= row[j];
  }
  return m;
}

inline bool guarded(const Graph& g, std::span<const Vertex> cops, Vertex v) {
  for (Vertex c : cops)
    if (g.reaches(c, v)) return true;
  return false;
}

struct TurnRecord {
  std::vector<Vertex> cops;          // before the cop move
  Vertex robber = 0;                 // before the cop move
  std::vector<Vertex> cop_move;      // after the cop move
  std::optional<Vertex> robber_move; // nullopt when the cop move captured
  int phi = 0;                       // at the robber-to-move position
  int r_size = 0;                    // |N[robber] minus cop squares| after the cop move
};

enum class Outcome { captured, cap, immortal, unresolved };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::captured: return "captured";
    case Outcome::cap: return "cap";
    case Outcome::immortal: return "immortal";
    case Outcome::unresolved: return "unresolved";
  }
  return "?";
}

struct Transcript {
  std::string graph;
  std::string cop_name;
  std::string robber_name;
  int n = 0;
  int k = 0;
  std::vector<Vertex> cop_start;
  Vertex robber_start = 0;
  std::vector<TurnRecord> turns;
  Outcome outcome = Outcome::cap;
  int result_turn = 0;
  std::string note;

  bool captured() const { return outcome == Outcome::captured; }
  int max_phi() const {
    int m = 0;
    for (const auto& t : turns) m = std::max(m, t.phi);
    return m;
  }
  int min_phi() const {
    if (turns.empty()) return 0;
    int m = turns.front().phi;
    for (const auto& t : turns) m = std::min(m, t.phi);
    return m;
  }
};

struct SimulateOptions {
  int turn_cap = 500;
  // Stop with an immortal result when a position repeats and both strategies
  // ignore history (the game then cycles forever).
  bool detect_cycles = false;
};

inline void check_legal_cops(const BoardGraph& g, std::span<const Vertex> from, std::span<const Vertex> to,
                             const std::string& who) {
  if (to.size() != from.size()) throw AdjudicationError(who + " moved the wrong number of cops");
  for (std::size_t i = 0; i < to.size(); ++i)
    if (to[i] < 0 || static_cast<std::size_t>(to[i]) >= g.size() || !g.graph().reaches(from[i], to[i]))
      throw AdjudicationError(who + " made an illegal cop move " + format_coord(g.coord(from[i])) + " -> " +
                              (to[i] >= 0 && static_cast<std::size_t>(to[i]) < g.size() ? format_coord(g.coord(to[i]))
                                                                                         : std::to_string(to[i])));
}

inline Transcript simulate(const BoardGraph& g, CopStrategy& cops, RobberStrategy& robber,
                           const SimulateOptions& opts = {}) {
  if (opts.turn_cap < 1) throw InvalidArgument("turn cap must be at least 1");
  Transcript tr;
  tr.graph = g.descriptor();
  tr.cop_name = cops.name();
  tr.robber_name = robber.name();
  tr.n = g.n();
  tr.k = cops.cop_count();

  std::vector<Vertex> c = cops.place(g);
  if (static_cast<int>(c.size()) != cops.cop_count()) throw AdjudicationError(cops.name() + " placed the wrong number of cops");
  for (Vertex v : c)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size()) throw AdjudicationError(cops.name() + " placed a cop off the board");
  Vertex r = robber.place(g, c);
  if (r < 0 || static_cast<std::size_t>(r) >= g.size()) throw AdjudicationError(robber.name() + " placed off the board");
  tr.cop_start = c;
  tr.robber_start = r;
  if (occupied(c, r)) {
    tr.outcome = Outcome::captured;
    return tr;
  }

  History h;
  std::set<std::vector<Vertex>> positions;
  const bool cycles = opts.detect_cycles && cops.history_free() && robber.history_free();
  for (int t = 1; t <= opts.turn_cap; ++t) {
    h.turn = t;
    if (cycles) {
      std::vector<Vertex> key(c);
      key.push_back(r);
      if (!positions.insert(key).second) {
        tr.outcome = Outcome::immortal;
        tr.result_turn = t - 1;
        tr.note = "position repeats under history-free strategies";
        return tr;
      }
    }
    TurnRecord rec;
    rec.cops = c;
    rec.robber = r;
    auto next = cops.move(g, c, r, h);
    if (auto why = cops.unresolved()) {
      tr.outcome = Outcome::unresolved;
      tr.result_turn = t - 1;
      tr.note = *why;
      return tr;
    }
    check_legal_cops(g, c, next, cops.name());
    c = std::move(next);
    rec.cop_move = c;
    h.record(c, r);
    if (occupied(c, r)) {
      tr.turns.push_back(std::move(rec));
      tr.outcome = Outcome::captured;
      tr.result_turn = t;
      return tr;
    }
    rec.phi = phi(g, r);
    for (Vertex v : g.graph().closed(r)) rec.r_size += !occupied(c, v);
    auto rm = robber.move(g, c, r, h);
    Vertex r2;
    if (!rm) {
      // Surrender: every reply lands on a cop.
      r2 = g.graph().closed(r).front();
      for (Vertex v : g.graph().closed(r))
        if (occupied(c, v)) {
          r2 = v;
          break;
        }
    } else {
      r2 = *rm;
      if (r2 < 0 || static_cast<std::size_t>(r2) >= g.size() || !g.graph().reaches(r, r2))
        throw AdjudicationError(robber.name() + " made an illegal move from " + format_coord(g.coord(r)));
    }
    rec.robber_move = r2;
    h.last_robber_step = std::make_pair(r, r2);
    r = r2;
    tr.turns.push_back(std::move(rec));
    if (occupied(c, r)) {
      tr.outcome = Outcome::captured;
      tr.result_turn = t;
      return tr;
    }
  }
  tr.outcome = Outcome::cap;
  tr.result_turn = opts.turn_cap;
  return tr;
}

inline nlohmann::json coord_json(const BoardGraph& g, Vertex v) {
  Coord c = g.coord(v);
  return nlohmann::json::array({c.x, c.y});
}

inline nlohmann::json coords_json(const BoardGraph& g, std::span<const Vertex> vs) {
  auto a = nlohmann::json::array();
  for (Vertex v : vs) a.push_back(coord_json(g, v));
  return a;
}

inline nlohmann::json transcript_to_json(const BoardGraph& g, const Transcript& tr) {
  nlohmann::json j;
  j["graph"] = tr.graph;
  j["cops"] = tr.cop_name;
  j["robber"] = tr.robber_name;
  j["start"] = {{"cops", coords_json(g, tr.cop_start)}, {"robber", coord_json(g, tr.robber_start)}};
  auto turns = nlohmann::json::array();
  for (const auto& t : tr.turns) {
    nlohmann::json rec;
    rec["cops"] = coords_json(g, t.cops);
    rec["robber"] = coord_json(g, t.robber);
    rec["copMove"] = coords_json(g, t.cop_move);
    rec["robberMove"] = t.robber_move ? coord_json(g, *t.robber_move) : nlohmann::json(nullptr);
    rec["phi"] = t.phi;
    rec["rSize"] = t.r_size;
    turns.push_back(std::move(rec));
  }
  j["turns"] = std::move(turns);
  j["result"] = {{"type", std::string(to_string(tr.outcome))}, {"turn", tr.result_turn}};
  if (!tr.note.empty()) j["result"]["note"] = tr.note;
  return j;
}

inline std::string csv_header() { return "n,k,cops,robber,result,turns,max_phi,min_phi\n"; }

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string transcript_csv_row(const Transcript& tr) {
  std::ostringstream os;
  os << tr.n << ',' << tr.k << ',' << csv_escape(tr.cop_name) << ',' << csv_escape(tr.robber_name) << ','
     << to_string(tr.outcome) << ',' << tr.result_turn << ',' << tr.max_phi() << ',' << tr.min_phi() << '\n';
  return os.str();
}

}  // namespace copnum
