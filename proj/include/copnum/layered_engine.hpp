#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "copnum/error.hpp"
#include "copnum/solution.hpp"

namespace copnum {

// Backward induction by capture depth over ordered cop tuples, with the
// robber's position packed into bit rows.
//
// Round d turns T_{d-1} (cops-to-move positions won within d-1 cop moves) into
// T_d in two steps:
//   B(C, r) = r in C, or every robber move from r lands in C or in T_{d-1}(C, .)
//   T_d(C, r) = some joint move C -> C' has B(C', r)
// The joint move is factored into one dilation per cop coordinate, so a round
// costs O(k * V^k * deg * V/64) words instead of enumerating deg^k joint moves
// per position. Each round is a pure function of the previous one, so the
// result does not depend on the thread count.
class LayeredSolution final : public Solution {
 public:
  static std::pair<std::shared_ptr<LayeredSolution>, SolveResult> solve(const Arena& arena, int k,
                                                                        const SolveOptions& opts) {
    const Graph& g = arena.graph;
    const std::size_t v = g.size();
    const std::size_t w = g.words();

    unsigned __int128 rows128 = 1;
    for (int i = 0; i < k; ++i) rows128 *= v;
    unsigned __int128 cells128 = rows128 * v;
    if (cells128 > opts.state_budget)
      throw ResourceError("layered engine needs " + std::to_string(static_cast<std::uint64_t>(cells128)) +
                          " position cells, over the state budget of " + std::to_string(opts.state_budget));
    const std::size_t rows = static_cast<std::size_t>(rows128);

    auto sol = std::shared_ptr<LayeredSolution>(new LayeredSolution(v, k, w));
    sol->has_depth_ = opts.track_strategy;
    if (sol->has_depth_) sol->depth_.assign(rows * v, 0);

    std::vector<std::size_t> stride(k);
    for (int i = k - 1; i >= 0; --i) stride[i] = (i == k - 1) ? 1 : stride[i + 1] * v;

    std::vector<std::uint64_t> full(w, ~std::uint64_t{0});
    if (v % 64) full[w - 1] = (std::uint64_t{1} << (v % 64)) - 1;

    auto cop_mask = [&](std::size_t t, std::uint64_t* out) {
      std::fill(out, out + w, 0);
      for (int i = 0; i < k; ++i) {
        std::size_t c = (t / stride[i]) % v;
        out[c >> 6] |= std::uint64_t{1} << (c & 63);
      }
    };

    // Sorted starting placements, in lexicographic (rank) order.
    struct Start {
      std::size_t row;
      std::vector<Vertex> cops;
      int resolved = -1;
    };
    std::vector<Start> starts;
    {
      MultisetRanker ranker(v, k);
      std::vector<Vertex> m(k, 0);
      do {
        std::size_t row = 0;
        for (int i = 0; i < k; ++i) row += static_cast<std::size_t>(m[i]) * stride[i];
        starts.push_back({row, m});
      } while (ranker.next(m));
    }

    std::vector<std::uint64_t>& win = sol->win_;
    win.assign(rows * w, 0);
    std::vector<std::uint64_t> b(rows * w), tmp(rows * w), next(rows * w);

    auto check_starts = [&](int round) {
      bool any = false;
      std::vector<std::uint64_t> mask(w);
      for (auto& s : starts) {
        if (s.resolved >= 0) {
          any = true;
          continue;
        }
        cop_mask(s.row, mask.data());
        bool ok = true;
        for (std::size_t j = 0; j < w && ok; ++j) ok = ((win[s.row * w + j] | mask[j]) == full[j]);
        if (ok) {
          s.resolved = round;
          any = true;
        }
      }
      return any;
    };

    bool found = check_starts(0);
    int round = 0;
    const unsigned threads = std::max(1u, opts.threads);
    for (;;) {
      if (found && !opts.track_strategy) break;
      ++round;
      if (round >= std::numeric_limits<std::uint16_t>::max()) throw ResourceError("capture depth exceeds 65534");

      parallel_for(rows, threads, [&](std::size_t lo, std::size_t hi) {
        std::vector<std::uint64_t> mask(w), x(w);
        for (std::size_t t = lo; t < hi; ++t) {
          cop_mask(t, mask.data());
          for (std::size_t j = 0; j < w; ++j) x[j] = win[t * w + j] | mask[j];
          std::uint64_t* out = &b[t * w];
          for (std::size_t j = 0; j < w; ++j) out[j] = mask[j];
          for (std::size_t j = 0; j < w; ++j) {
            std::uint64_t bits = x[j] & ~mask[j];
            while (bits) {
              std::size_t r = j * 64 + static_cast<std::size_t>(std::countr_zero(bits));
              bits &= bits - 1;
              auto nb = g.closed_row(static_cast<Vertex>(r));
              bool trapped = true;
              for (std::size_t q = 0; q < w && trapped; ++q) trapped = (nb[q] & ~x[q]) == 0;
              if (trapped) out[r >> 6] |= std::uint64_t{1} << (r & 63);
            }
          }
        }
      });

      const std::vector<std::uint64_t>* src = &b;
      for (int i = 0; i < k; ++i) {
        std::vector<std::uint64_t>* dst = (i == k - 1) ? &next : (src == &tmp ? &b : &tmp);
        const std::size_t st = stride[i];
        parallel_for(rows, threads, [&](std::size_t lo, std::size_t hi) {
          for (std::size_t t = lo; t < hi; ++t) {
            std::size_t c = (t / st) % v;
            std::size_t base = t - c * st;
            std::uint64_t* out = &(*dst)[t * w];
            std::fill(out, out + w, 0);
            for (Vertex a : g.closed(static_cast<Vertex>(c))) {
              const std::uint64_t* in = &(*src)[(base + static_cast<std::size_t>(a) * st) * w];
              for (std::size_t j = 0; j < w; ++j) out[j] |= in[j];
            }
          }
        });
        src = dst;
      }

      bool changed = false;
      for (std::size_t t = 0; t < rows; ++t)
        for (std::size_t j = 0; j < w; ++j) {
          std::uint64_t fresh = next[t * w + j] & ~win[t * w + j];
          if (!fresh) continue;
          changed = true;
          if (sol->has_depth_) {
            while (fresh) {
              std::size_t r = j * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
              fresh &= fresh - 1;
              sol->depth_[t * v + r] = static_cast<std::uint16_t>(round);
            }
          }
        }
      if (!changed) break;
      win.swap(next);
      found = check_starts(round);
    }
    // Without tracking the sweep stops at the first winning start.
    sol->complete_ = opts.track_strategy || !found;

    SolveResult res;
    res.k = k;
    res.engine = "layered";
    res.state_count = logical_state_count(v, k);
    res.peak_memory_estimate = 4 * rows * w * 8 + (sol->has_depth_ ? rows * v * 2 : 0);
    const Start* best = nullptr;
    for (const auto& s : starts)
      if (s.resolved >= 0 && (!best || s.resolved < best->resolved)) best = &s;
    if (best) {
      res.cops_win = true;
      res.capture_time = best->resolved;
      std::vector<Vertex> labels;
      for (Vertex c : best->cops) labels.push_back(arena.labels[c]);
      std::sort(labels.begin(), labels.end());
      res.optimal_start = std::move(labels);
    }
    return {sol, res};
  }

  std::size_t vertex_count() const override { return v_; }
  int cop_count() const override { return k_; }
  bool complete() const override { return complete_; }
  bool has_depth() const override { return has_depth_; }

  bool cop_win(std::span<const Vertex> cops, Vertex robber) const override {
    if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return true;
    std::size_t t = row(cops);
    return test_bit(std::span<const std::uint64_t>(win_).subspan(t * w_, w_), robber);
  }

  std::optional<int> depth(std::span<const Vertex> cops, Vertex robber) const override {
    if (!has_depth_) throw DomainError("solution was computed without strategy tracking");
    if (std::find(cops.begin(), cops.end(), robber) != cops.end()) return 0;
    auto d = depth_[row(cops) * v_ + robber];
    if (d == 0) return std::nullopt;
    return d;
  }

 private:
  LayeredSolution(std::size_t v, int k, std::size_t w) : v_(v), k_(k), w_(w) {}

  std::size_t row(std::span<const Vertex> cops) const {
    std::size_t t = 0;
    for (Vertex c : cops) t = t * v_ + static_cast<std::size_t>(c);
    return t;
  }

  std::size_t v_;
  int k_;
  std::size_t w_;
  bool complete_ = true;
  bool has_depth_ = false;
  std::vector<std::uint64_t> win_;
  std::vector<std::uint16_t> depth_;
};

}  // namespace copnum
