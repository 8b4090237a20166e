#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/formations.hpp"
#include "copnum/greedy.hpp"
#include "copnum/oracle_strategies.hpp"
#include "copnum/regions.hpp"

namespace copnum {

struct StrategyParams {
  SolveOptions solve;
  GreedyOptions greedy;
  int octagon_side = 8;
};

namespace detail {

// "name" or "name:count".
inline std::pair<std::string, std::optional<int>> split_spec(std::string_view spec) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  if (colon == std::string_view::npos) return {name, std::nullopt};
  std::string num(spec.substr(colon + 1));
  char* end = nullptr;
  long v = std::strtol(num.c_str(), &end, 10);
  if (num.empty() || *end != '\0' || v < 1 || v > 64) throw InvalidArgument("bad count in strategy '" + std::string(spec) + "'");
  return {name, static_cast<int>(v)};
}

inline int require_count(const std::string& name, std::optional<int> k, std::optional<int> fixed) {
  if (fixed) {
    if (k && *k != *fixed)
      throw InvalidArgument(name + " uses exactly " + std::to_string(*fixed) + " cops, got " + std::to_string(*k));
    return *fixed;
  }
  if (!k) throw InvalidArgument(name + " needs a cop count, e.g. " + name + ":3");
  return *k;
}

}  // namespace detail

inline std::vector<std::string> cop_strategy_names() {
  return {"greedy:k", "square_formation:4", "diagonal_formation:3", "oracle:k", "guarding:k"};
}

inline std::vector<std::string> robber_strategy_names() {
  return {"greedy", "four_cycle", "degree4", "octagon", "region", "oracle"};
}

inline std::unique_ptr<CopStrategy> make_cop_strategy(std::string_view spec, const StrategyParams& p = {}) {
  auto [name, k] = detail::split_spec(spec);
  if (name == "greedy" || name == "greedy_queen") return std::make_unique<GreedyCops>(detail::require_count(name, k, {}), p.greedy);
  if (name == "square_formation" || name == "knight_square_formation") {
    detail::require_count(name, k, 4);
    return std::make_unique<KnightSquareFormation>();
  }
  if (name == "diagonal_formation" || name == "knight_diagonal_formation") {
    detail::require_count(name, k, 3);
    return std::make_unique<KnightDiagonalFormation>(p.solve);
  }
  if (name == "oracle") return std::make_unique<OracleCops>(detail::require_count(name, k, {}), p.solve);
  if (name == "guarding" || name == "royal_guarding_cops")
    return std::make_unique<RoyalGuardingCops>(detail::require_count(name, k, {}));
  throw InvalidArgument("unknown cop strategy '" + std::string(spec) + "'");
}

inline std::unique_ptr<RobberStrategy> make_robber_strategy(std::string_view spec, const StrategyParams& p = {}) {
  auto [name, k] = detail::split_spec(spec);
  if (name == "greedy" || name == "greedy_queen") return std::make_unique<GreedyRobber>();
  if (name == "four_cycle" || name == "robber_four_cycle") return std::make_unique<FourCycleRobber>();
  if (name == "degree4" || name == "degree4_subgraph" || name == "robber_degree4_subgraph")
    return std::make_unique<Degree4Robber>();
  if (name == "octagon" || name == "robber_octagon") return std::make_unique<OctagonRobber>(k.value_or(p.octagon_side));
  if (name == "region") return std::make_unique<EvasionRegionRobber>();
  if (name == "oracle") return std::make_unique<OracleRobber>(p.solve);
  throw InvalidArgument("unknown robber strategy '" + std::string(spec) + "'");
}

}  // namespace copnum
