#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "copnum/board.hpp"
#include "copnum/board_io.hpp"

using namespace copnum;

namespace {

// Independent adjacency check straight from the definitions.
bool royal_adjacent_oracle(Coord a, Coord b, const DirectionSet& dirs) {
  if (a == b) return false;
  int ddx = b.x - a.x, ddy = b.y - a.y;
  for (const auto& d : dirs)
    if (static_cast<long>(ddx) * d.dy() - static_cast<long>(ddy) * d.dx() == 0) return true;
  return false;
}

bool animal_adjacent_oracle(Coord a, Coord b, const DirectionSet& steps) {
  int ddx = b.x - a.x, ddy = b.y - a.y;
  for (const auto& d : steps)
    if ((ddx == d.step_dx() && ddy == d.step_dy()) || (ddx == -d.step_dx() && ddy == -d.step_dy())) return true;
  return false;
}

std::vector<DirectionSet> sample_direction_sets() {
  return {
      DirectionSet{{1, 0}},
      DirectionSet{{1, 1}},
      DirectionSet{{1, 0}, {0, 1}},
      DirectionSet{{1, 0}, {2, 1}},
      DirectionSet{{1, 2}, {2, -1}},
      DirectionSet{{1, 0}, {0, 1}, {1, 1}},
      DirectionSet{{1, 1}, {1, -1}, {1, 3}},
      queen_directions(),
      knight_steps(),
  };
}

}  // namespace

TEST(Direction, CanonicalizesSignAndReduces) {
  Direction d(-2, -4);
  EXPECT_EQ(d.dx(), 1);
  EXPECT_EQ(d.dy(), 2);
  EXPECT_EQ(d.step_dx(), 2);
  EXPECT_EQ(d.step_dy(), 4);
  EXPECT_EQ(Direction(0, -3).dy(), 1);
  EXPECT_EQ(Direction(1, -1), Direction(-1, 1));
  EXPECT_THROW(Direction(0, 0), InvalidArgument);
}

TEST(DirectionSet, RejectsEmptyAndParsesGrammar) {
  EXPECT_THROW(DirectionSet(std::vector<Direction>{}), InvalidArgument);
  auto d = parse_directions("1,0; 0,1 ;1,-1");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_THROW(parse_directions("1,0;0,0"), InvalidArgument);
  EXPECT_THROW(parse_directions("1;2"), InvalidArgument);
  EXPECT_THROW(parse_directions("a,b"), InvalidArgument);
  EXPECT_THROW(parse_directions(""), InvalidArgument);
  // a direction and its negation are the same
  EXPECT_EQ(parse_directions("1,0;-1,0").size(), 1u);
}

TEST(BuildRoyal, QueenCenterNeighborhoodOnEightByEight) {
  auto q = preset(Piece::queen, 8);
  Vertex v = q.id({4, 4});
  int oracle = 0;
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y) oracle += royal_adjacent_oracle({4, 4}, {x, y}, queen_directions());
  EXPECT_EQ(oracle, 27);
  EXPECT_EQ(q.graph().degree(v), 27u);
}

TEST(BuildRoyal, SmallCases) {
  auto g = build_royal(2, DirectionSet{{1, 1}});
  EXPECT_EQ(g.graph().edge_count(), 1u);
  EXPECT_TRUE(g.graph().adjacent(g.id({1, 1}), g.id({2, 2})));
  EXPECT_EQ(g.graph().degree(g.id({1, 2})), 0u);
  EXPECT_EQ(g.graph().degree(g.id({2, 1})), 0u);

  auto k1 = build_royal(1, queen_directions());
  EXPECT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1.graph().edge_count(), 0u);
  EXPECT_THROW(build_royal(0, queen_directions()), InvalidArgument);
}

TEST(BuildRoyal, QueenSevenCenterDegree) {
  auto q = preset(Piece::queen, 7);
  EXPECT_EQ(q.size(), 49u);
  EXPECT_EQ(q.graph().degree(q.id({4, 4})), 24u);
}

TEST(BuildAnimal, KnightAndKing) {
  auto n2 = preset(Piece::knight, 2);
  EXPECT_EQ(n2.graph().edge_count(), 0u);

  auto n3 = preset(Piece::knight, 3);
  int deg2 = 0, deg0 = 0;
  for (std::size_t v = 0; v < n3.size(); ++v) {
    auto d = n3.graph().degree(static_cast<Vertex>(v));
    deg2 += d == 2;
    deg0 += d == 0;
  }
  EXPECT_EQ(deg2, 8);
  EXPECT_EQ(deg0, 1);
  EXPECT_EQ(n3.graph().degree(n3.id({2, 2})), 0u);

  EXPECT_EQ(preset(Piece::king, 1).size(), 1u);
  auto k5 = preset(Piece::king, 5);
  EXPECT_EQ(k5.graph().degree(k5.id({3, 3})), 8u);
  EXPECT_EQ(k5.graph().degree(k5.id({1, 1})), 3u);
}

TEST(BuildAnimal, NonPrimitiveStepKeepsRawVector) {
  auto g = build_animal(5, DirectionSet{{2, 0}});
  EXPECT_TRUE(g.graph().adjacent(g.id({1, 1}), g.id({3, 1})));
  EXPECT_FALSE(g.graph().adjacent(g.id({1, 1}), g.id({2, 1})));
}

TEST(Board, AdjacencyMatchesDefinitionsExhaustively) {
  for (const auto& dirs : sample_direction_sets())
    for (int n = 1; n <= 7; ++n)
      for (Mode mode : {Mode::royal, Mode::animal}) {
        BoardGraph g(n, mode, dirs);
        for (std::size_t u = 0; u < g.size(); ++u)
          for (std::size_t v = 0; v < g.size(); ++v) {
            Coord a = g.coord(u), b = g.coord(v);
            bool expect = mode == Mode::royal ? royal_adjacent_oracle(a, b, dirs) : animal_adjacent_oracle(a, b, dirs);
            ASSERT_EQ(g.graph().adjacent(u, v), expect) << g.descriptor() << " " << format_coord(a) << format_coord(b);
            ASSERT_EQ(g.graph().adjacent(u, v), g.graph().adjacent(v, u));
          }
      }
}

TEST(Board, VertexIdCodec) {
  auto g = preset(Piece::queen, 6);
  EXPECT_EQ(g.id({1, 1}), 0);
  EXPECT_EQ(g.id({1, 2}), 1);
  EXPECT_EQ(g.id({2, 1}), 6);
  for (std::size_t v = 0; v < g.size(); ++v) EXPECT_EQ(g.id(g.coord(v)), static_cast<Vertex>(v));
}

TEST(Board, UnitStepAnimalEdgesAreRoyalEdges) {
  for (int n = 1; n <= 6; ++n) {
    auto king = preset(Piece::king, n);
    auto queen = preset(Piece::queen, n);
    for (auto [u, v] : king.graph().edges()) EXPECT_TRUE(queen.graph().adjacent(u, v));
    if (n <= 2) {
      EXPECT_EQ(king.graph(), queen.graph());
    }
  }
}

TEST(Components, OrderAndSizes) {
  auto c = components(preset(Piece::knight, 3));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].size(), 8u);
  EXPECT_EQ(c[1].size(), 1u);
  EXPECT_EQ(components(preset(Piece::bishop, 4)).size(), 2u);
  auto q = components(preset(Piece::queen, 8));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].size(), 64u);
  auto n2 = components(preset(Piece::knight, 2));
  ASSERT_EQ(n2.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(n2[i], std::vector<Vertex>{static_cast<Vertex>(i)});
}

TEST(LinesThrough, QueenLines) {
  auto q9 = preset(Piece::queen, 9);
  auto lines = lines_by_direction(q9, q9.id({5, 1}));
  EXPECT_EQ(lines[std::pair(1, 1)].size(), 5u);
  EXPECT_EQ(lines[std::pair(1, -1)].size(), 5u);

  auto q8 = preset(Piece::queen, 8);
  auto corner = lines_by_direction(q8, q8.id({1, 1}));
  EXPECT_EQ(corner[std::pair(1, -1)], (std::vector<Vertex>{q8.id({1, 1})}));
  auto center = lines_by_direction(q8, q8.id({4, 4}));
  EXPECT_EQ(center[std::pair(1, 0)].size(), 8u);
  EXPECT_EQ(center[std::pair(0, 1)].size(), 8u);

  EXPECT_THROW(lines_through(preset(Piece::knight, 5), 0), UnsupportedMode);
}

TEST(LinesThrough, RoyalLineConsistency) {
  for (const auto& dirs : sample_direction_sets()) {
    auto g = build_royal(6, dirs);
    for (std::size_t u = 0; u < g.size(); ++u) {
      std::set<Vertex> on_line;
      for (const auto& line : lines_through(g, u)) {
        EXPECT_NE(std::find(line.begin(), line.end(), static_cast<Vertex>(u)), line.end());
        EXPECT_GE(line.size(), 1u);
        EXPECT_LE(line.size(), 6u);
        on_line.insert(line.begin(), line.end());
      }
      for (std::size_t v = 0; v < g.size(); ++v)
        EXPECT_EQ(g.graph().adjacent(u, v), u != v && on_line.count(v) > 0);
    }
  }
}

TEST(Automorphisms, DihedralSubgroups) {
  EXPECT_EQ(board_automorphisms(preset(Piece::queen, 5)).size(), 8u);
  EXPECT_EQ(board_automorphisms(preset(Piece::knight, 5)).size(), 8u);
  EXPECT_EQ(board_automorphisms(preset(Piece::king, 5)).size(), 8u);
  EXPECT_EQ(board_automorphisms(preset(Piece::rook, 5)).size(), 8u);
  auto odd = board_automorphisms(build_royal(5, DirectionSet{{1, 0}, {2, 1}}));
  ASSERT_EQ(odd.size(), 2u);
  EXPECT_EQ(odd[0].name, "identity");
  EXPECT_EQ(odd[1].name, "rot180");
}

TEST(Automorphisms, AreGraphAutomorphisms) {
  for (const auto& dirs : sample_direction_sets())
    for (int n = 1; n <= 8; ++n)
      for (Mode mode : {Mode::royal, Mode::animal}) {
        BoardGraph g(n, mode, dirs);
        auto syms = board_automorphisms(g);
        ASSERT_FALSE(syms.empty());
        EXPECT_EQ(syms.front().name, "identity");
        for (const auto& s : syms) EXPECT_TRUE(is_automorphism(g.graph(), vertex_permutation(g, s))) << s.name;
      }
}

TEST(BoardIo, JsonRoundTripPreservesAdjacency) {
  for (const auto& dirs : sample_direction_sets())
    for (Mode mode : {Mode::royal, Mode::animal}) {
      BoardGraph g(5, mode, dirs);
      auto j = board_to_json(g);
      auto back = board_from_json(nlohmann::json::parse(j.dump()));
      EXPECT_EQ(back.graph(), g.graph());
      EXPECT_EQ(board_to_json(back).dump(), j.dump());
    }
}

TEST(BoardIo, JsonSchemaAndValidation) {
  auto j = board_to_json(build_royal(2, DirectionSet{{1, 1}}));
  EXPECT_EQ(j.dump(), R"({"dirs":[[1,1]],"edges":[[0,3]],"mode":"royal","n":2})");
  auto bad = j;
  bad["edges"] = nlohmann::json::array({{0, 1}});
  EXPECT_THROW(board_from_json(bad), InvalidArgument);
  bad = j;
  bad["mode"] = "bishopish";
  EXPECT_THROW(board_from_json(bad), InvalidArgument);
  EXPECT_THROW(board_from_json(nlohmann::json::parse("{}")), InvalidArgument);
}

TEST(BoardIo, DotListsEveryEdge) {
  auto g = preset(Piece::knight, 3);
  auto dot = board_to_dot(g);
  std::size_t count = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++count;
  EXPECT_EQ(count, g.graph().edge_count());
}
