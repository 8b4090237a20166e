#include <gtest/gtest.h>

#include "copnum/analysis.hpp"

using namespace copnum;

namespace {

bool queen_sees(Coord a, Coord b) {
  return a.x == b.x || a.y == b.y || std::abs(a.x - b.x) == std::abs(a.y - b.y);
}

}  // namespace

TEST(Guarding, PassesOnSmallBoards) {
  for (int n : {2, 3, 7}) {
    auto rep = verify_guarding_bounds(n);
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_EQ(rep.rows[0].status, Status::pass) << n;
    EXPECT_EQ(rep.rows[0].details["pairs"], n * n * (n * n - 1));
  }
  EXPECT_THROW(verify_guarding_bounds(1), InvalidArgument);
  EXPECT_THROW(verify_guarding_bounds(17), InvalidArgument);
}

TEST(Guarding, MaxCountsMatchCoordinateScan) {
  const int n = 9;
  int max_line = 0, max_threat = 0;
  const int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (int cx = 1; cx <= n; ++cx)
    for (int cy = 1; cy <= n; ++cy)
      for (int rx = 1; rx <= n; ++rx)
        for (int ry = 1; ry <= n; ++ry) {
          if (cx == rx && cy == ry) continue;
          bool threat = queen_sees({cx, cy}, {rx, ry});
          for (auto& d : dirs) {
            std::vector<Coord> line;
            for (int t = -n; t <= n; ++t) {
              Coord p{rx + t * d[0], ry + t * d[1]};
              if (p.x >= 1 && p.x <= n && p.y >= 1 && p.y <= n) line.push_back(p);
            }
            bool on = std::any_of(line.begin(), line.end(), [&](Coord p) { return p.x == cx && p.y == cy; });
            if (on) continue;
            int seen = 0;
            for (Coord p : line) seen += !(p.x == rx && p.y == ry) && queen_sees({cx, cy}, p);
            max_line = std::max(max_line, seen);
            if (threat) max_threat = std::max(max_threat, seen);
          }
        }
  auto rep = verify_guarding_bounds(n);
  EXPECT_EQ(rep.rows[0].details["maxGuardedPerLine"], max_line);
  EXPECT_EQ(rep.rows[0].details["maxGuardedWhenThreatening"], max_threat);
}

TEST(Counting, Boundary) {
  EXPECT_EQ(two_cop_bound_value(10), 6);
  EXPECT_EQ(two_cop_bound_value(9), 5);
  EXPECT_EQ(two_cop_bound_value(7), 4);
  auto rep = two_cop_lower_bound_report(2, 18);
  const auto& row = rep.rows.at(0);
  EXPECT_EQ(row.status, Status::pass);
  EXPECT_EQ(row.details["firstN"], 10);
  for (const auto& e : row.details["perN"]) {
    int n = e["n"];
    EXPECT_EQ(e["minMaxDiagonal"], e["value"]) << n;
    std::uint64_t m = static_cast<std::uint64_t>(n) * n;
    EXPECT_EQ(e["tripleEnumeration"], m < 3 ? 0 : m * (m - 1) * (m - 2) / 2);
    EXPECT_EQ(e["exactStates"], logical_state_count(m, 2));
  }
}

TEST(Counting, NoBoundaryInShortRange) {
  auto rep = two_cop_lower_bound_report(2, 9);
  EXPECT_EQ(rep.rows[0].status, Status::fail);
  EXPECT_TRUE(rep.rows[0].details["firstN"].is_null());
  EXPECT_FALSE(rep.rows[0].counterexample.is_null());
}

TEST(Saddle, GreedyTranscriptPasses) {
  auto q = preset(Piece::queen, 12);
  GreedyCops c(3);
  GreedyRobber r;
  auto tr = simulate(q, c, r);
  auto rep = saddle_check(q, tr);
  EXPECT_EQ(rep.rows[0].status, Status::pass);
  auto with_reply = std::count_if(tr.turns.begin(), tr.turns.end(), [](const TurnRecord& t) { return t.robber_move.has_value(); });
  EXPECT_EQ(rep.rows[0].details["turnsChecked"], with_reply);
}

TEST(Saddle, CorruptedTranscriptFails) {
  auto q = preset(Piece::queen, 12);
  GreedyCops c(3);
  GreedyRobber r;
  auto tr = simulate(q, c, r);
  // Replace the first robber move that has a strictly worse alternative.
  int corrupted = 0;
  for (std::size_t t = 0; t < tr.turns.size() && !corrupted; ++t) {
    auto& rec = tr.turns[t];
    if (!rec.robber_move) continue;
    int chosen = GreedyCops::reply_value(q, rec.cop_move, *rec.robber_move);
    for (Vertex v : q.graph().closed(rec.robber))
      if (!occupied(rec.cop_move, v) && GreedyCops::reply_value(q, rec.cop_move, v) < chosen) {
        rec.robber_move = v;
        corrupted = static_cast<int>(t) + 1;
        break;
      }
  }
  ASSERT_GT(corrupted, 0);
  auto rep = saddle_check(q, tr);
  EXPECT_EQ(rep.rows[0].status, Status::fail);
  EXPECT_EQ(rep.rows[0].counterexample["turn"], corrupted);
}

TEST(Saddle, SampledTurnsOnly) {
  auto q = preset(Piece::queen, 13);
  GreedyCops c(3);
  GreedyRobber r;
  auto tr = simulate(q, c, r);
  auto rep = saddle_check(q, tr, std::vector<int>{1});
  EXPECT_EQ(rep.rows[0].details["turnsChecked"], 1);
}

TEST(Suite, RowFilter) {
  SuiteConfig cfg;
  cfg.rows = {"counting"};
  auto rep = theorem_suite(cfg);
  ASSERT_EQ(rep.rows.size(), 2u);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.group, "counting");
    EXPECT_FALSE(r.source.empty());
    EXPECT_EQ(r.status, Status::pass);
  }
  cfg.rows = {"bogus"};
  EXPECT_THROW(theorem_suite(cfg), InvalidArgument);
}

TEST(Suite, BudgetExhaustionIsUnresolved) {
  SuiteConfig cfg;
  cfg.rows = {"queens"};
  cfg.solve.state_budget = 1000;
  auto rep = theorem_suite(cfg);
  EXPECT_FALSE(rep.rows.empty());
  EXPECT_EQ(rep.count(Status::unresolved), rep.rows.size());
  EXPECT_FALSE(rep.failed());
  EXPECT_FALSE(rep.passed());
}

TEST(Suite, ParallelRowsMatchSequential) {
  SuiteConfig cfg;
  cfg.rows = {"guarding", "saddle", "knights"};
  cfg.threads = 1;
  auto a = report_to_json(theorem_suite(cfg)).dump();
  cfg.threads = 4;
  auto b = report_to_json(theorem_suite(cfg)).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, JsonAndTable) {
  VerificationReport rep;
  CheckRow ok;
  ok.key = "a";
  ok.summary = "fine";
  CheckRow bad;
  bad.key = "b";
  bad.status = Status::fail;
  bad.counterexample = {{"x", 1}};
  rep.add(ok);
  rep.add(bad);
  auto j = report_to_json(rep);
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["rows"][1]["status"], "fail");
  EXPECT_FALSE(j["rows"][0].contains("seconds"));
  EXPECT_TRUE(report_to_json(rep, true)["rows"][0].contains("seconds"));
  EXPECT_TRUE(rep.failed());
  auto t = report_to_table(rep);
  EXPECT_NE(t.find("fine"), std::string::npos);
  EXPECT_NE(t.find("1 pass, 1 fail, 0 unresolved"), std::string::npos);
}
