#include "gridcraft/matcher.hpp"

#include <cstdint>
#include <vector>

namespace gridcraft {

namespace {

constexpr int kSpanX = 2 * kMaxShiftX + 1;
constexpr int kSpanZ = 2 * kMaxShiftZ + 1;
constexpr int kSpanY = 2 * kMaxShiftY + 1;
constexpr std::size_t kPerRotation = static_cast<std::size_t>(kSpanX) * kSpanZ * kSpanY;
constexpr std::size_t kBins = 4 * kPerRotation;

// Bin order equals lexicographic (k, dx, dz, dy) order, so the first maximal bin wins ties.
constexpr std::size_t bin_index(int k, int dx, int dz, int dy) {
  return static_cast<std::size_t>(k) * kPerRotation +
         (static_cast<std::size_t>(dx + kMaxShiftX) * kSpanZ + static_cast<std::size_t>(dz + kMaxShiftZ)) * kSpanY +
         static_cast<std::size_t>(dy + kMaxShiftY);
}

struct BinKey {
  int rotation;
  Offset offset;
};

constexpr BinKey bin_key(std::size_t bin) {
  const int k = static_cast<int>(bin / kPerRotation);
  std::size_t rest = bin % kPerRotation;
  const int dy = static_cast<int>(rest % kSpanY) - kMaxShiftY;
  rest /= kSpanY;
  const int dz = static_cast<int>(rest % kSpanZ) - kMaxShiftZ;
  const int dx = static_cast<int>(rest / kSpanZ) - kMaxShiftX;
  return {k, {dx, dz, dy}};
}

struct Votes {
  std::vector<std::uint16_t> color;
  std::vector<std::uint16_t> occupancy;
  std::vector<std::uint32_t> touched;
};

// Every (built block, target block) pair pins exactly one offset per rotation.
Votes cast_votes(const VoxelGrid& built, const VoxelGrid& target, bool count_occupancy) {
  Votes votes;
  votes.color.assign(kBins, 0);
  if (count_occupancy) votes.occupancy.assign(kBins, 0);

  const auto built_blocks = built.blocks();
  const auto target_blocks = target.blocks();
  votes.touched.reserve(4 * built_blocks.size() * target_blocks.size());

  for (int k = 0; k < 4; ++k) {
    for (const auto& b : built_blocks) {
      const auto [rx, rz] = rotate_column(b.cell.x(), b.cell.z(), k);
      for (const auto& t : target_blocks) {
        const bool same = b.id == t.id;
        if (!same && !count_occupancy) continue;
        const auto bin = bin_index(k, t.cell.x() - rx, t.cell.z() - rz, t.cell.y() - b.cell.y());
        if (count_occupancy) {
          if (votes.occupancy[bin]++ == 0) votes.touched.push_back(static_cast<std::uint32_t>(bin));
          if (same) ++votes.color[bin];
        } else if (votes.color[bin]++ == 0) {
          votes.touched.push_back(static_cast<std::uint32_t>(bin));
        }
      }
    }
  }
  return votes;
}

}  // namespace

MatchResult max_intersection(const VoxelGrid& built, const VoxelGrid& target) {
  const Votes votes = cast_votes(built, target, false);
  std::size_t best_bin = 0;
  int best = 0;
  for (const std::uint32_t bin : votes.touched) {
    const int score = votes.color[bin];
    if (score > best || (score == best && bin < best_bin)) {
      best = score;
      best_bin = bin;
    }
  }
  if (best == 0) best_bin = 0;
  const BinKey key = bin_key(best_bin);
  return {best, key.rotation, key.offset};
}

Alignment closest_alignment(const VoxelGrid& built, const VoxelGrid& target) {
  const Votes votes = cast_votes(built, target, true);
  Alignment best{};
  std::size_t best_bin = 0;
  for (const std::uint32_t bin : votes.touched) {
    const int score = votes.color[bin];
    const int overlap = votes.occupancy[bin];
    const bool better = score > best.score || (score == best.score && overlap > best.overlap) ||
                        (score == best.score && overlap == best.overlap && bin < best_bin);
    if (better) {
      best.score = score;
      best.overlap = overlap;
      best_bin = bin;
    }
  }
  if (best.overlap == 0) best_bin = 0;
  const BinKey key = bin_key(best_bin);
  best.rotation = key.rotation;
  best.offset = key.offset;
  return best;
}

VoxelGrid transform(const VoxelGrid& grid, int rotation, Offset offset) {
  VoxelGrid out;
  for (const auto& [cell, id] : grid.blocks()) {
    const auto [rx, rz] = rotate_column(cell.x(), cell.z(), rotation);
    if (const auto moved = CellCoord::checked(rx + offset.dx, rz + offset.dz, cell.y() + offset.dy)) {
      out.set(*moved, id);
    }
  }
  return out;
}

}  // namespace gridcraft
