#pragma once

#include <sstream>
#include <string>

#include "copnum/board.hpp"
#include "json.hpp"

namespace copnum {

// {"n", "mode", "dirs": [[dx,dy],...], "edges": [[u,v],...]}, u < v, sorted.
// Animal graphs list their raw steps under "dirs".
inline nlohmann::json board_to_json(const BoardGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["mode"] = std::string(to_string(g.mode()));
  auto dirs = nlohmann::json::array();
  for (const auto& d : g.dirs()) dirs.push_back({d.step_dx(), d.step_dy()});
  j["dirs"] = std::move(dirs);
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.graph().edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

// Rebuilds the board from n/mode/dirs and checks the edge list against it.
inline BoardGraph board_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    auto mode_s = j.at("mode").get<std::string>();
    Mode mode;
    if (mode_s == "royal") mode = Mode::royal;
    else if (mode_s == "animal") mode = Mode::animal;
    else throw InvalidArgument("unknown mode '" + mode_s + "'");
    std::vector<Direction> dirs;
    for (const auto& d : j.at("dirs")) dirs.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
    BoardGraph g(n, mode, DirectionSet(std::move(dirs)));
    if (j.contains("edges")) {
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      if (!(Graph(g.size(), edges) == g.graph())) throw InvalidArgument("edge list does not match n/mode/dirs");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph json: ") + e.what());
  }
}

inline std::string board_to_dot(const BoardGraph& g) {
  std::ostringstream os;
  os << "graph board {\n";
  os << "  // " << g.descriptor() << "\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Coord c = g.coord(static_cast<Vertex>(v));
    os << "  " << v << " [label=\"" << c.x << "," << c.y << "\", pos=\"" << c.x << "," << c.y << "!\"];\n";
  }
  for (auto [u, v] : g.graph().edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace copnum
