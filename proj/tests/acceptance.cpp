// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <iostream>
#include <map>
#include <string>

#include "copnum/analysis.hpp"

using namespace copnum;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> prefixes;
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

bool report_criterion(const VerificationReport& rep, const Criterion& c) {
  std::vector<const CheckRow*> rows;
  for (const auto& r : rep.rows)
    for (const auto& p : c.prefixes)
      if (r.key == p || starts_with(r.key, p + "/")) {
        rows.push_back(&r);
        break;
      }
  bool ok = !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const CheckRow* r) { return r->status == Status::pass; });
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
  for (const auto* r : rows) std::cout << "    " << to_string(r->status) << "  " << r->key << "  " << r->summary << '\n';
  if (rows.empty()) std::cout << "    no rows\n";
  return ok;
}

std::vector<std::string> keys(std::initializer_list<const char*> ks) { return {ks.begin(), ks.end()}; }

// Transcripts used by the determinism criterion.
std::string transcript_bundle() {
  std::string out;
  for (int n : {7, 10, 13, 18}) {
    auto q = preset(Piece::queen, n);
    GreedyCops c(3);
    GreedyRobber r;
    out += transcript_to_json(q, simulate(q, c, r)).dump() + "\n";
  }
  auto b = preset(Piece::knight, 8);
  KnightSquareFormation sq;
  GreedyRobber r;
  out += transcript_to_json(b, simulate(b, sq, r)).dump() + "\n";
  return out;
}

}  // namespace

int main() {
  SuiteConfig cfg;
  cfg.threads = 1;
  auto rep = theorem_suite(cfg);

  std::vector<Criterion> criteria{
      {1, "knight cop numbers N_1..N_8", keys({"knights/N1", "knights/N2", "knights/N3", "knights/N4", "knights/N5", "knights/N6",
                                               "knights/N7", "knights/N8"})},
      {2, "{(3,3),(4,4)} wins on N_4, N_5, N_6", keys({"knights/N4/start", "knights/N5/start", "knights/N6/start"})},
      {3, "Q_7..Q_9: two cops lose, three win", keys({"queens/Q7", "queens/Q8", "queens/Q9"})},
      {4, "two cops lose on Q_10..Q_18",
       keys({"queens/Q10", "queens/Q11", "queens/Q12", "queens/Q13", "queens/Q14", "queens/Q15", "queens/Q16", "queens/Q17",
             "queens/Q18"})},
      {5, "greedy 3 cops capture on Q_7..Q_18 within the cap", keys({"greedy"})},
      {6, "guarding bounds on Q_7, Q_10, Q_13", keys({"guarding"})},
      {7, "least n with n - floor((n-1)/2) > 5 is 10", keys({"counting"})},
      {8, "octagon fit, line coverage and survival on Q_22", keys({"octagon"})},
      {9, "royal families: guarding capture, evasion region, queen threshold", keys({"royal"})},
      {10, "dismantlable iff cop-win", keys({"dismantle"})},
      {11, "saddle property on Q_7, Q_10, Q_13", keys({"saddle/Q7", "saddle/Q10", "saddle/Q13", "saddle/negative-control"})},
  };

  bool all = true;
  for (const auto& c : criteria) all = report_criterion(rep, c) && all;

  // Criterion 12: a second run with parallel rows, and repeated transcripts.
  SuiteConfig par = cfg;
  par.threads = 4;
  auto first = report_to_json(rep).dump();
  auto second = report_to_json(theorem_suite(par)).dump();
  auto t1 = transcript_bundle(), t2 = transcript_bundle();
  bool det = first == second && t1 == t2;
  std::cout << (det ? "PASS" : "FAIL") << " criterion 12: repeated runs are byte-identical, with 1 and 4 workers\n";
  std::cout << "    report " << first.size() << " bytes " << (first == second ? "identical" : "differs") << ", transcripts "
            << t1.size() << " bytes " << (t1 == t2 ? "identical" : "differs") << '\n';
  all = all && det;

  for (const auto& n : rep.notes) std::cout << "note: " << n << '\n';
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return all ? 0 : 1;
}
