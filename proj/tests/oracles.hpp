#pragma once

// Slow reference implementations written without the library's matcher or rotation helpers.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gridcraft/matcher.hpp"
#include "gridcraft/rng.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace oracle {

using gridcraft::BlockId;
using gridcraft::CellCoord;
using gridcraft::VoxelGrid;

// Inverse of the quarter-turn map (x, z) -> (z, 10 - x) applied k times.
inline std::array<int, 2> unrotate(int u, int v, int k) {
  switch (k) {
    case 1: return {10 - v, u};
    case 2: return {10 - u, 10 - v};
    case 3: return {v, 10 - u};
    default: return {u, v};
  }
}

struct Counts {
  int score = 0;
  int overlap = 0;
};

struct Cell {
  int x, z, y;
  BlockId id;
};

inline std::vector<Cell> cells_of(const VoxelGrid& g) {
  std::vector<Cell> out;
  for (int x = 0; x < 11; ++x) {
    for (int z = 0; z < 11; ++z) {
      for (int y = 0; y < 9; ++y) {
        const BlockId id = g.at(CellCoord(x, z, y));
        if (id != BlockId::Air) out.push_back({x, z, y, id});
      }
    }
  }
  return out;
}

// Looks up the preimage in `built` of every target block.
inline Counts count_alignment(const VoxelGrid& built, const std::vector<Cell>& target, int k, int dx, int dz, int dy) {
  Counts c;
  for (const Cell& t : target) {
    const auto [bx, bz] = unrotate(t.x - dx, t.z - dz, k);
    const int by = t.y - dy;
    if (bx < 0 || bx > 10 || bz < 0 || bz > 10 || by < 0 || by > 8) continue;
    const BlockId b = built.at(CellCoord(bx, bz, by));
    if (b == BlockId::Air) continue;
    ++c.overlap;
    if (b == t.id) ++c.score;
  }
  return c;
}

struct Match {
  int score = 0;
  int rotation = 0;
  int dx = -10;
  int dz = -10;
  int dy = -8;
};

// Exhaustive search, first strictly better alignment in (k, dx, dz, dy) order wins.
inline Match brute_force_match(const VoxelGrid& built, const VoxelGrid& target) {
  Match best;
  bool any = false;
  const auto cells = cells_of(target);
  for (int k = 0; k < 4; ++k) {
    for (int dx = -10; dx <= 10; ++dx) {
      for (int dz = -10; dz <= 10; ++dz) {
        for (int dy = -8; dy <= 8; ++dy) {
          const int s = count_alignment(built, cells, k, dx, dz, dy).score;
          if (!any || s > best.score) {
            best = {s, k, dx, dz, dy};
            any = true;
          }
        }
      }
    }
  }
  return best;
}

// Differing cells over occupied cells, at the best-score alignment with the largest overlap.
inline double brute_force_rho(const VoxelGrid& a, const VoxelGrid& b) {
  const int na = a.nonair();
  const int nb = b.nonair();
  if (na + nb == 0) return 0.0;
  Counts best{-1, -1};
  const auto cells = cells_of(b);
  for (int k = 0; k < 4; ++k) {
    for (int dx = -10; dx <= 10; ++dx) {
      for (int dz = -10; dz <= 10; ++dz) {
        for (int dy = -8; dy <= 8; ++dy) {
          const Counts c = count_alignment(a, cells, k, dx, dz, dy);
          if (c.score > best.score || (c.score == best.score && c.overlap > best.overlap)) best = c;
        }
      }
    }
  }
  const int occupied = na + nb - best.overlap;
  return static_cast<double>(occupied - best.score) / occupied;
}

// Up to `max_blocks` blocks scattered anywhere (not necessarily connected).
inline VoxelGrid random_grid(gridcraft::Rng& rng, int max_blocks, int colors = 6) {
  VoxelGrid g;
  const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blocks) + 1));
  for (int i = 0; i < n; ++i) {
    const CellCoord c(static_cast<int>(rng.below(11)), static_cast<int>(rng.below(11)), static_cast<int>(rng.below(9)));
    g.set(c, static_cast<BlockId>(1 + rng.below(static_cast<std::uint64_t>(colors))));
  }
  return g;
}

// Random grid clustered in a small box so that alignments overlap often.
inline VoxelGrid random_cluster(gridcraft::Rng& rng, int max_blocks, int colors = 3) {
  VoxelGrid g;
  const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_blocks) + 1));
  const int ox = static_cast<int>(rng.below(8));
  const int oz = static_cast<int>(rng.below(8));
  for (int i = 0; i < n; ++i) {
    const CellCoord c(ox + static_cast<int>(rng.below(3)), oz + static_cast<int>(rng.below(3)),
                      static_cast<int>(rng.below(3)));
    g.set(c, static_cast<BlockId>(1 + rng.below(static_cast<std::uint64_t>(colors))));
  }
  return g;
}

// Corpus BLEU-n by direct counting: every candidate n-gram is compared against every
// reference n-gram, with matched reference positions crossed off.
inline double bleu(const std::vector<std::vector<std::string>>& cands,
                   const std::vector<std::vector<std::string>>& refs, int n) {
  double log_sum = 0.0;
  std::size_t c_len = 0;
  std::size_t r_len = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    c_len += cands[i].size();
    r_len += refs[i].size();
  }
  for (int order = 1; order <= n; ++order) {
    std::size_t matched = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& c = cands[i];
      const auto& r = refs[i];
      if (c.size() < static_cast<std::size_t>(order)) continue;
      std::vector<bool> used(r.size() + 1, false);
      for (std::size_t a = 0; a + order <= c.size(); ++a) {
        ++total;
        for (std::size_t b = 0; b + order <= r.size(); ++b) {
          if (used[b]) continue;
          bool same = true;
          for (int k = 0; k < order && same; ++k) same = c[a + k] == r[b + k];
          if (same) {
            used[b] = true;
            ++matched;
            break;
          }
        }
      }
    }
    if (matched == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched) / static_cast<double>(total));
  }
  const double bp = c_len > r_len ? 1.0 : std::exp(1.0 - static_cast<double>(r_len) / static_cast<double>(c_len));
  return bp * std::exp(log_sum / n);
}

// Keyword precision and recall from per-pair multiset intersections.
inline std::pair<double, double> keyword_pr(const std::vector<std::vector<std::string>>& cands,
                                            const std::vector<std::vector<std::string>>& refs,
                                            const std::vector<std::string>& words) {
  auto is_word = [&](const std::string& t) {
    for (const auto& w : words) {
      if (w == t) return true;
    }
    return false;
  };
  double matched = 0, in_c = 0, in_r = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<std::string> rk;
    for (const auto& t : refs[i]) {
      if (is_word(t)) rk.push_back(t);
    }
    in_r += static_cast<double>(rk.size());
    for (const auto& t : cands[i]) {
      if (!is_word(t)) continue;
      ++in_c;
      for (auto& r : rk) {
        if (r == t) {
          r.clear();
          ++matched;
          break;
        }
      }
    }
  }
  return {in_c == 0 ? 0.0 : matched / in_c, in_r == 0 ? 0.0 : matched / in_r};
}

}  // namespace oracle
