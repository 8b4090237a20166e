#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

// Lexicographic ranking of non-decreasing k-tuples over [0, values).
// count(k) = C(values + k - 1, k); counts saturate at UINT64_MAX.
class MultisetRanker {
 public:
  MultisetRanker(std::size_t values, std::size_t max_k) : values_(values), cnt_(max_k + 2) {
    for (auto& row : cnt_) row.assign(values + 1, 0);
    cnt_[0].assign(values + 1, 1);
    for (std::size_t j = 1; j < cnt_.size(); ++j)
      for (std::size_t v = 1; v <= values; ++v) {
        unsigned __int128 s = static_cast<unsigned __int128>(cnt_[j - 1][v]) + cnt_[j][v - 1];
        cnt_[j][v] = s > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                    : static_cast<std::uint64_t>(s);
      }
  }

  std::size_t values() const { return values_; }

  // Number of size-k multisets over the first `v` values.
  std::uint64_t count(std::size_t k, std::size_t v) const { return cnt_[k][v]; }
  std::uint64_t count(std::size_t k) const { return cnt_[k][values_]; }

  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t res = 0;
    std::size_t lo = 0, k = sorted.size();
    for (std::size_t i = 0; i < k; ++i) {
      auto x = static_cast<std::size_t>(sorted[i]);
      std::size_t rest = k - i - 1;
      res += cnt_[rest + 1][values_ - lo] - cnt_[rest + 1][values_ - x];
      lo = x;
    }
    return res;
  }

  void unrank(std::uint64_t r, std::span<Vertex> out) const {
    std::size_t lo = 0, k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t rest = k - i - 1;
      std::size_t y = lo;
      for (;; ++y) {
        std::uint64_t c = cnt_[rest][values_ - y];
        if (r < c) break;
        r -= c;
      }
      out[i] = static_cast<Vertex>(y);
      lo = y;
    }
  }

  // Advances to the lexicographic successor; false after the last tuple.
  bool next(std::span<Vertex> m) const {
    auto k = m.size();
    for (std::size_t i = k; i-- > 0;) {
      if (static_cast<std::size_t>(m[i]) + 1 < values_) {
        Vertex v = m[i] + 1;
        for (std::size_t j = i; j < k; ++j) m[j] = v;
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t values_;
  std::vector<std::vector<std::uint64_t>> cnt_;
};

enum class Side : std::uint8_t { cops = 0, robber = 1 };

// A game position: sorted cop multiset, robber vertex, side to move.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Side side = Side::cops;

  bool captured() const { return std::find(cops.begin(), cops.end(), robber) != cops.end(); }
  bool operator==(const GameState&) const = default;
};

// Packs a GameState into one 64-bit index: (rank(cops) * V + robber) * 2 + side.
class StateCodec {
 public:
  StateCodec(std::size_t vertex_count, std::size_t k) : ranker_(vertex_count, k), v_(vertex_count), k_(k) {}

  std::uint64_t state_count() const {
    unsigned __int128 s = static_cast<unsigned __int128>(ranker_.count(k_)) * v_ * 2;
    return s > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(s);
  }

  std::uint64_t encode(const GameState& s) const {
    return (ranker_.rank(s.cops) * v_ + static_cast<std::uint64_t>(s.robber)) * 2 + static_cast<std::uint64_t>(s.side);
  }

  GameState decode(std::uint64_t index) const {
    GameState s;
    s.side = static_cast<Side>(index & 1);
    index >>= 1;
    s.robber = static_cast<Vertex>(index % v_);
    s.cops.resize(k_);
    ranker_.unrank(index / v_, s.cops);
    return s;
  }

  const MultisetRanker& ranker() const { return ranker_; }

 private:
  MultisetRanker ranker_;
  std::size_t v_, k_;
};

}  // namespace copnum
