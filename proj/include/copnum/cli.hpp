#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copnum/analysis.hpp"
#include "copnum/board_io.hpp"
#include "copnum/catalog.hpp"
#include "json.hpp"

namespace copnum {

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_invalid = 2, exit_budget = 3, exit_verify_failed = 4 };

struct RunConfig {
  std::string command;
  std::optional<std::string> piece;
  std::string mode = "royal";
  std::optional<std::string> dirs;
  std::optional<std::string> graph_file;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<std::string> cops;
  std::optional<std::string> robber;
  int cap = 500;
  std::optional<std::uint64_t> budget;
  bool no_symmetry = false;
  std::string engine = "auto";
  std::optional<std::string> format;
  std::optional<std::string> out;
  unsigned threads = 1;
  std::vector<std::string> rows;
  std::string tie = "safe";
  std::string order = "unvisited-first";
  int octagon_side = 8;
  bool timing = false;
  int verbose = 0;
};

namespace detail {

inline Mode parse_mode(const std::string& s) {
  if (s == "royal") return Mode::royal;
  if (s == "animal") return Mode::animal;
  throw InvalidArgument("unknown mode '" + s + "' (royal or animal)");
}

inline Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::automatic;
  if (s == "retrograde") return Engine::retrograde;
  if (s == "layered") return Engine::layered;
  throw InvalidArgument("unknown engine '" + s + "'");
}

inline BoardGraph resolve_board(const RunConfig& c) {
  if (c.graph_file) {
    std::ifstream in(*c.graph_file);
    if (!in) throw InvalidArgument("cannot read graph file '" + *c.graph_file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("graph file is not valid JSON: ") + e.what());
    }
    return board_from_json(j);
  }
  if (!c.n) throw InvalidArgument("--n is required");
  if (c.piece) return preset(parse_piece(*c.piece), *c.n);
  if (!c.dirs) throw InvalidArgument("give --piece or --dirs");
  return BoardGraph(*c.n, parse_mode(c.mode), parse_directions(*c.dirs));
}

inline SolveOptions solve_options(const RunConfig& c) {
  SolveOptions o;
  o.use_symmetry = !c.no_symmetry;
  o.engine = parse_engine(c.engine);
  if (c.budget) o.state_budget = *c.budget;
  o.threads = std::max(1u, c.threads);
  return o;
}

inline std::string format_or(const RunConfig& c, std::initializer_list<const char*> allowed) {
  std::string f = c.format.value_or(*allowed.begin());
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw InvalidArgument("format '" + f + "' is not available for " + c.command + " (" + list + ")");
}

inline std::string solve_text(const RunConfig& c, const BoardGraph& b, const SolveOptions& o, std::string& format) {
  format = format_or(c, {"json", "table"});
  std::ostringstream os;
  auto comps = components(b);
  if (!c.k) {
    auto rep = cop_number(b, o);
    nlohmann::json j;
    j["graph"] = b.descriptor();
    auto arr = nlohmann::json::array();
    for (const auto& cv : rep.components) {
      nlohmann::json e;
      e["size"] = cv.members.size();
      e["representative"] = coord_json(b, cv.members.front());
      e["copNumber"] = cv.cop_number ? nlohmann::json(*cv.cop_number) : nlohmann::json(nullptr);
      if (!cv.note.empty() && !cv.cop_number) e["note"] = cv.note;
      arr.push_back(std::move(e));
    }
    j["components"] = std::move(arr);
    j["additive"] = rep.additive_total ? nlohmann::json(*rep.additive_total) : nlohmann::json(nullptr);
    j["maxComponent"] = rep.max_component ? nlohmann::json(*rep.max_component) : nlohmann::json(nullptr);
    if (format == "json") {
      os << j.dump(2) << '\n';
    } else {
      os << b.descriptor() << '\n';
      for (const auto& e : j["components"])
        os << "  component of size " << e["size"] << " at " << e["representative"].dump() << ": "
           << (e["copNumber"].is_null() ? std::string("unresolved") : e["copNumber"].dump()) << '\n';
      os << "additive " << j["additive"].dump() << ", max component " << j["maxComponent"].dump() << '\n';
    }
    if (!rep.resolved()) throw ResourceError("cop number unresolved within the state budget\n" + os.str());
    return os.str();
  }
  if (comps.size() == 1) {
    auto r = solve_k(b, *c.k, o);
    auto j = solve_result_to_json(r, &b);
    if (format == "json") {
      os << j.dump(2) << '\n';
    } else {
      os << b.descriptor() << ", k = " << r.k << ": " << (r.cops_win ? "cops win" : "robber wins");
      if (r.optimal_start) os << " from " << j["optimalStart"].dump() << " in " << *r.capture_time << " cop moves";
      os << "\nstates " << r.state_count << ", engine " << r.engine << '\n';
    }
    return os.str();
  }
  // Disconnected board: one solve per component.
  nlohmann::json j;
  j["k"] = *c.k;
  j["graph"] = b.descriptor();
  auto arr = nlohmann::json::array();
  bool all = true;
  for (const auto& comp : comps) {
    auto res = solve_arena(Arena::from_component(b, comp), *c.k, o).result;
    auto e = solve_result_to_json(res);
    if (res.optimal_start) {
      auto coords = nlohmann::json::array();
      for (Vertex v : *res.optimal_start) coords.push_back(coord_json(b, comp[v]));
      e["optimalStart"] = coords;
    }
    e["size"] = comp.size();
    e["representative"] = coord_json(b, comp.front());
    all = all && res.cops_win;
    arr.push_back(std::move(e));
  }
  j["copsWin"] = all;
  j["perComponent"] = true;
  j["components"] = std::move(arr);
  if (format == "json") {
    os << j.dump(2) << '\n';
  } else {
    os << b.descriptor() << ", k = " << *c.k << " per component: " << (all ? "cops win on every component" : "robber wins somewhere")
       << '\n';
    for (const auto& e : j["components"])
      os << "  size " << e["size"] << " at " << e["representative"].dump() << ": " << (e["copsWin"].get<bool>() ? "win" : "lose")
         << '\n';
  }
  return os.str();
}

inline std::string graph_text(const RunConfig& c, const BoardGraph& b, std::string& format) {
  format = format_or(c, {"json", "dot", "table"});
  if (format == "json") return board_to_json(b).dump() + "\n";
  if (format == "dot") return board_to_dot(b);
  std::ostringstream os;
  auto comps = components(b);
  os << b.descriptor() << "\nvertices " << b.size() << ", edges " << b.graph().edge_count() << ", components "
     << comps.size() << " (sizes";
  for (const auto& comp : comps) os << ' ' << comp.size();
  os << ")\n";
  return os.str();
}

inline std::string simulate_text(const RunConfig& c, const BoardGraph& b, const SolveOptions& o, std::string& format) {
  format = format_or(c, {"json", "csv", "table"});
  if (!c.cops || !c.robber) throw InvalidArgument("simulate needs --cops and --robber");
  StrategyParams p;
  p.solve = o;
  p.greedy.tie = parse_tie_measure(c.tie);
  if (c.order != "unvisited-first" && c.order != "tie-first")
    throw InvalidArgument("unknown order '" + c.order + "' (unvisited-first or tie-first)");
  p.greedy.unvisited_first = c.order == "unvisited-first";
  p.octagon_side = c.octagon_side;
  std::string cop_spec = *c.cops;
  if (c.k && cop_spec.find(':') == std::string::npos) cop_spec += ":" + std::to_string(*c.k);
  auto cops = make_cop_strategy(cop_spec, p);
  if (c.k && cops->cop_count() != *c.k)
    throw InvalidArgument("strategy " + cops->name() + " uses " + std::to_string(cops->cop_count()) + " cops, --k is " +
                          std::to_string(*c.k));
  auto robber = make_robber_strategy(*c.robber, p);
  if (c.cap < 1) throw InvalidArgument("--cap must be positive");
  auto tr = simulate(b, *cops, *robber, {c.cap, false});
  if (format == "json") return transcript_to_json(b, tr).dump(2) + "\n";
  if (format == "csv") return csv_header() + transcript_csv_row(tr);
  std::ostringstream os;
  os << tr.graph << ": " << tr.cop_name << " vs " << tr.robber_name << " -> " << to_string(tr.outcome) << " at turn "
     << tr.result_turn;
  if (!tr.note.empty()) os << " (" << tr.note << ")";
  os << "\nphi range " << tr.min_phi() << ".." << tr.max_phi() << '\n';
  return os.str();
}

}  // namespace detail

// Runs one command; args exclude the program name. Returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"copnum: cops and robbers on chess, royal and animal graphs"};
  app.set_config("--config", "", "flat key=value file mirroring the flags; flags win");
  RunConfig c;
  app.add_option("command", c.command, "graph | solve | simulate | verify")->required()->check(
      CLI::IsMember({"graph", "solve", "simulate", "verify"}));
  app.add_option("--piece", c.piece, "preset: queen knight king rook bishop");
  app.add_option("--mode", c.mode, "royal or animal");
  app.add_option("--dirs", c.dirs, "steps as \"dx,dy;dx,dy\"");
  app.add_option("--graph", c.graph_file, "board JSON written by `graph --format json`");
  app.add_option("--n", c.n, "board size");
  app.add_option("--k", c.k, "number of cops");
  app.add_option("--cops", c.cops, "cop strategy, e.g. greedy:3");
  app.add_option("--robber", c.robber, "robber strategy");
  app.add_option("--cap", c.cap, "turn cap");
  app.add_option("--budget", c.budget, "state budget (default from COPNUM_STATE_BUDGET)");
  app.add_flag("--no-symmetry", c.no_symmetry, "disable symmetry reduction");
  app.add_option("--engine", c.engine, "auto | retrograde | layered");
  app.add_option("--format", c.format, "json | csv | dot | table");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--threads", c.threads, "worker threads");
  app.add_option("--rows", c.rows, "verify row groups")->delimiter(',');
  app.add_option("--tie", c.tie, "greedy tie measure: safe | available | next");
  app.add_option("--order", c.order, "greedy key order: unvisited-first | tie-first");
  app.add_option("--side", c.octagon_side, "octagon side length");
  app.add_flag("--timing", c.timing, "include row timings in verify output");
  app.add_flag("-v,--verbose", c.verbose, "progress on stderr");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string text, format;
  int code = exit_ok;
  try {
    auto opts = detail::solve_options(c);
    if (c.command == "verify") {
      format = detail::format_or(c, {"table", "json"});
      SuiteConfig sc;
      sc.rows = {c.rows.begin(), c.rows.end()};
      sc.solve = opts;
      sc.solve.threads = 1;
      sc.threads = std::max(1u, c.threads);
      sc.turn_cap = c.cap;
      if (c.n) {
        if (*c.n < 2 || *c.n > 16) throw InvalidArgument("guarding rows need 2 <= n <= 16");
        sc.guarding_n = {*c.n};
      }
      auto rep = theorem_suite(sc);
      text = format == "json" ? report_to_json(rep, c.timing).dump(2) + "\n" : report_to_table(rep, c.timing);
      if (rep.failed()) code = exit_verify_failed;
    } else {
      auto board = detail::resolve_board(c);
      if (c.verbose) err << "board " << board.descriptor() << ", " << board.size() << " vertices\n";
      if (c.command == "graph") text = detail::graph_text(c, board, format);
      else if (c.command == "solve") text = detail::solve_text(c, board, opts, format);
      else text = detail::simulate_text(c, board, opts, format);
    }
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return exit_budget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const UnsupportedMode& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  if (c.verbose)
    err << c.command << " finished in "
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";

  if (c.out) {
    std::ofstream f(*c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << *c.out << "'\n";
      return exit_invalid;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace copnum
