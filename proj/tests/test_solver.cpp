#include <gtest/gtest.h>

#include <map>
#include <random>

#include "copnum/solver.hpp"

using namespace copnum;

namespace {

// Plain minimax over ordered cop tuples, joint moves enumerated directly.
// Returns the optimal capture time, or -1 when the robber escapes.
struct BruteForce {
  const Graph& g;
  int k;
  std::size_t v, rows;
  std::vector<int> depth;  // cops-to-move, index row * v + r; -1 = not won

  BruteForce(const Graph& graph, int cops) : g(graph), k(cops), v(graph.size()) {
    rows = 1;
    for (int i = 0; i < k; ++i) rows *= v;
    depth.assign(rows * v, -1);
    std::vector<Vertex> c(k);
    for (std::size_t t = 0; t < rows; ++t) {
      decode(t, c);
      for (std::size_t r = 0; r < v; ++r)
        if (std::count(c.begin(), c.end(), static_cast<Vertex>(r))) depth[t * v + r] = 0;
    }
    for (int d = 1;; ++d) {
      std::vector<std::pair<std::size_t, int>> fresh;
      for (std::size_t t = 0; t < rows; ++t)
        for (std::size_t r = 0; r < v; ++r)
          if (depth[t * v + r] < 0 && cop_wins_in(t, static_cast<Vertex>(r), d)) fresh.push_back({t * v + r, d});
      if (fresh.empty()) break;
      for (auto [i, dd] : fresh) depth[i] = dd;
    }
  }

  void decode(std::size_t t, std::vector<Vertex>& c) const {
    for (int i = k - 1; i >= 0; --i) {
      c[i] = static_cast<Vertex>(t % v);
      t /= v;
    }
  }
  std::size_t encode(const std::vector<Vertex>& c) const {
    std::size_t t = 0;
    for (Vertex x : c) t = t * v + x;
    return t;
  }

  // Some joint move leaves the robber with only replies of depth < d.
  bool cop_wins_in(std::size_t t, Vertex r, int d) const {
    std::vector<Vertex> c(k), c2(k);
    decode(t, c);
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      for (int i = 0; i < k; ++i) c2[i] = g.closed(c[i])[idx[i]];
      bool ok = true;
      if (!std::count(c2.begin(), c2.end(), r)) {
        std::size_t t2 = encode(c2);
        for (Vertex r2 : g.closed(r)) {
          if (std::count(c2.begin(), c2.end(), r2)) continue;
          int dd = depth[t2 * v + r2];
          if (dd < 0 || dd >= d) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return true;
      int i = k - 1;
      while (i >= 0 && ++idx[i] == g.closed(c[i]).size()) idx[i--] = 0;
      if (i < 0) return false;
    }
  }

  int capture_time() const {
    int best = -1;
    std::vector<Vertex> c(k);
    for (std::size_t t = 0; t < rows; ++t) {
      decode(t, c);
      int worst = 0;
      for (std::size_t r = 0; r < v && worst >= 0; ++r) worst = depth[t * v + r] < 0 ? -1 : std::max(worst, depth[t * v + r]);
      if (worst >= 0 && (best < 0 || worst < best)) best = worst;
    }
    return best;
  }
};

Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(rng() % i), static_cast<Vertex>(i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < p) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

SolveOptions with_engine(Engine e, bool sym = true, bool track = false) {
  SolveOptions o;
  o.engine = e;
  o.use_symmetry = sym;
  o.track_strategy = track;
  return o;
}

}  // namespace

TEST(Codec, MultisetRankIsBijective) {
  for (std::size_t v : {1u, 3u, 7u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      MultisetRanker r(v, k);
      std::vector<Vertex> m(k, 0), back(k);
      std::uint64_t expect = 0;
      do {
        EXPECT_EQ(r.rank(m), expect);
        r.unrank(expect, back);
        EXPECT_EQ(back, m);
        ++expect;
      } while (r.next(m));
      EXPECT_EQ(expect, r.count(k));
    }
  }
}

TEST(Codec, StateIndexRoundTrip) {
  StateCodec codec(6, 3);
  // C(6+3-1, 3) * 6 * 2
  EXPECT_EQ(codec.state_count(), 56u * 6 * 2);
  for (std::uint64_t i = 0; i < codec.state_count(); ++i) EXPECT_EQ(codec.encode(codec.decode(i)), i);
}

TEST(SolveK, PathsCyclesCompleteGraphs) {
  for (Engine e : {Engine::retrograde, Engine::layered}) {
    for (std::size_t n = 1; n <= 9; ++n) {
      auto p = solve_arena(Arena::from_graph(path_graph(n)), 1, with_engine(e)).result;
      EXPECT_TRUE(p.cops_win);
      EXPECT_EQ(*p.capture_time, static_cast<int>(n / 2)) << "path " << n;
      auto kn = solve_arena(Arena::from_graph(complete_graph(n)), 1, with_engine(e)).result;
      EXPECT_TRUE(kn.cops_win);
      EXPECT_EQ(*kn.capture_time, n == 1 ? 0 : 1);
    }
    for (std::size_t n = 4; n <= 9; ++n) {
      auto c = Arena::from_graph(cycle_graph(n));
      EXPECT_FALSE(solve_arena(c, 1, with_engine(e)).result.cops_win) << "cycle " << n;
      EXPECT_TRUE(solve_arena(c, 2, with_engine(e)).result.cops_win) << "cycle " << n;
    }
  }
}

TEST(SolveK, EnginesMatchBruteForceOnRandomGraphs) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 6;
    Graph g = random_connected_graph(n, trial % 2 ? 0.15 : 0.35, rng);
    for (int k = 1; k <= 2; ++k) {
      BruteForce bf(g, k);
      int expect = bf.capture_time();
      for (Engine e : {Engine::retrograde, Engine::layered}) {
        auto out = solve_arena(Arena::from_graph(g), k, with_engine(e, true, true));
        ASSERT_EQ(out.result.cops_win, expect >= 0) << "trial " << trial << " k " << k << " " << to_string(e);
        if (expect >= 0) {
          EXPECT_EQ(*out.result.capture_time, expect);
        }
        // per-position depths agree too
        std::vector<Vertex> c(k);
        for (std::size_t t = 0; t < bf.rows; ++t) {
          bf.decode(t, c);
          for (std::size_t r = 0; r < n; ++r) {
            auto d = out.solution->depth(c, static_cast<Vertex>(r));
            int bd = bf.depth[t * n + r];
            ASSERT_EQ(d.has_value(), bd >= 0);
            if (d) {
              ASSERT_EQ(*d, bd);
            }
          }
        }
      }
    }
  }
}

TEST(SolveK, SymmetryDoesNotChangeResults) {
  for (auto piece : {Piece::queen, Piece::king, Piece::rook}) {
    auto g = preset(piece, 4);
    for (int k = 1; k <= 2; ++k) {
      auto a = solve_k(g, k, with_engine(Engine::retrograde, true));
      auto b = solve_k(g, k, with_engine(Engine::retrograde, false));
      EXPECT_EQ(a.cops_win, b.cops_win);
      EXPECT_EQ(a.capture_time, b.capture_time);
      EXPECT_EQ(a.optimal_start, b.optimal_start);
    }
  }
}

TEST(SolveK, EnginesAgreeOnBoards) {
  for (auto piece : {Piece::queen, Piece::king, Piece::rook, Piece::bishop}) {
    for (int n = 2; n <= 5; ++n) {
      auto b = preset(piece, n);
      auto comps = components(b);
      for (const auto& comp : comps) {
        auto arena = Arena::from_component(b, comp);
        for (int k = 1; k <= 2; ++k) {
          auto r = solve_arena(arena, k, with_engine(Engine::retrograde)).result;
          auto l = solve_arena(arena, k, with_engine(Engine::layered)).result;
          EXPECT_EQ(r.cops_win, l.cops_win) << b.descriptor() << " k=" << k;
          EXPECT_EQ(r.capture_time, l.capture_time) << b.descriptor() << " k=" << k;
          EXPECT_EQ(r.optimal_start, l.optimal_start) << b.descriptor() << " k=" << k;
        }
      }
    }
  }
}

TEST(SolveK, MonotoneInCopCount) {
  auto b = preset(Piece::knight, 4);
  bool won = false;
  for (int k = 1; k <= 3; ++k) {
    auto r = solve_k(b, k);
    if (won) {
      EXPECT_TRUE(r.cops_win);
    }
    won = won || r.cops_win;
  }
  EXPECT_TRUE(won);
}

TEST(SolveK, InputValidation) {
  auto n3 = preset(Piece::knight, 3);
  EXPECT_THROW(solve_k(n3, 1), InvalidArgument);  // disconnected
  auto q4 = preset(Piece::queen, 4);
  EXPECT_THROW(solve_k(q4, 0), InvalidArgument);
  EXPECT_THROW(solve_k(q4, 5), InvalidArgument);
  SolveOptions tight;
  tight.state_budget = 100;
  EXPECT_THROW(solve_k(q4, 2, tight), ResourceError);
}

TEST(SolveK, ResultJsonShape) {
  auto q = preset(Piece::queen, 3);
  auto r = solve_k(q, 1);
  auto j = solve_result_to_json(r, &q);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["copsWin"], true);
  EXPECT_EQ(j["optimalStart"], nlohmann::json::parse("[[2,2]]"));
  EXPECT_EQ(j["captureTime"], 1);
  EXPECT_EQ(j["stateCount"], 9u * 9 * 2);
  auto c5 = Arena::from_graph(cycle_graph(5));
  auto lose = solve_arena(c5, 1).result;
  auto jl = solve_result_to_json(lose);
  EXPECT_TRUE(jl["captureTime"].is_null());
  EXPECT_TRUE(jl["optimalStart"].is_null());
}

TEST(CopNumber, SmallKnightBoards) {
  auto r1 = cop_number(preset(Piece::knight, 1));
  ASSERT_TRUE(r1.resolved());
  EXPECT_EQ(*r1.max_component, 1);

  auto r2 = cop_number(preset(Piece::knight, 2));
  ASSERT_EQ(r2.components.size(), 4u);
  EXPECT_EQ(*r2.max_component, 1);
  EXPECT_EQ(*r2.additive_total, 4);

  auto r3 = cop_number(preset(Piece::knight, 3));
  ASSERT_EQ(r3.components.size(), 2u);
  EXPECT_EQ(*r3.components[0].cop_number, 2);
  EXPECT_EQ(*r3.components[1].cop_number, 1);
  EXPECT_EQ(*r3.additive_total, 3);
}

TEST(CopNumber, BudgetExhaustionIsReportedNotGuessed) {
  SolveOptions o;
  o.state_budget = 1000;
  auto r = cop_number(preset(Piece::queen, 6), o);
  EXPECT_FALSE(r.resolved());
  EXPECT_FALSE(r.components[0].cop_number.has_value());
  EXPECT_FALSE(r.components[0].note.empty());
}

TEST(Oracles, ReplayMatchesCaptureTime) {
  for (Engine e : {Engine::retrograde, Engine::layered}) {
    for (int n = 4; n <= 5; ++n) {
      auto b = preset(Piece::knight, n);
      SolveOptions o = with_engine(e);
      auto sp = extract_strategies(b, 2, o);
      ASSERT_TRUE(sp.result.cops_win);
      std::vector<Vertex> cops(sp.result.optimal_start->begin(), sp.result.optimal_start->end());
      Vertex r = sp.robber.place(cops);
      int turns = 0;
      while (std::find(cops.begin(), cops.end(), r) == cops.end()) {
        cops = sp.cops.move(cops, r);
        ++turns;
        if (std::find(cops.begin(), cops.end(), r) != cops.end()) break;
        auto next = sp.robber.move(cops, r);
        if (!next) break;
        r = *next;
        ASSERT_LE(turns, 100);
      }
      EXPECT_EQ(turns, *sp.result.capture_time) << to_string(e) << " n=" << n;
    }
  }
}

TEST(Dismantling, KnownGraphs) {
  EXPECT_TRUE(is_dismantlable(path_graph(6)).dismantlable);
  EXPECT_TRUE(is_dismantlable(complete_graph(5)).dismantlable);
  EXPECT_FALSE(is_dismantlable(cycle_graph(5)).dismantlable);
  EXPECT_TRUE(is_dismantlable(cycle_graph(3)).dismantlable);
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(is_dismantlable(preset(Piece::king, n)).dismantlable) << n;
  auto d = is_dismantlable(path_graph(4));
  EXPECT_EQ(d.order.size(), 3u);
}

TEST(Dismantling, AgreesWithOneCopSolveOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(3 + rng() % 7, 0.1 + 0.05 * (trial % 6), rng);
    bool solve = solve_arena(Arena::from_graph(g), 1).result.cops_win;
    EXPECT_EQ(is_dismantlable(g).dismantlable, solve) << trial;
  }
}

TEST(Engines, ThreadCountDoesNotChangeResult) {
  auto b = preset(Piece::queen, 6);
  SolveOptions o1 = with_engine(Engine::layered, true, true), o4 = o1;
  o4.threads = 4;
  auto a = solve_arena(Arena::from_board(b), 2, o1);
  auto c = solve_arena(Arena::from_board(b), 2, o4);
  EXPECT_EQ(a.result.capture_time, c.result.capture_time);
  EXPECT_EQ(a.result.optimal_start, c.result.optimal_start);
  std::vector<Vertex> cops(2);
  for (cops[0] = 0; cops[0] < 36; ++cops[0])
    for (cops[1] = 0; cops[1] < 36; ++cops[1])
      for (Vertex r = 0; r < 36; ++r) ASSERT_EQ(a.solution->depth(cops, r), c.solution->depth(cops, r));
}
