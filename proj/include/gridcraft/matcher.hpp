#pragma once

#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

/// Translation applied after rotation, in cells.
struct Offset {
  int dx = 0;
  int dz = 0;
  int dy = 0;

  friend constexpr bool operator==(const Offset&, const Offset&) = default;
};

inline constexpr int kMaxShiftX = kZoneX - 1;
inline constexpr int kMaxShiftZ = kZoneZ - 1;
inline constexpr int kMaxShiftY = kZoneY - 1;

/// Best color-matching overlap of a built grid against a target.
struct MatchResult {
  int score = 0;
  int rotation = 0;
  Offset offset{};

  friend constexpr bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Maximum, over the 4 vertical rotations k and all offsets in [-10,10]x[-10,10]x[-8,8],
/// of the number of cells where the rotated-then-shifted built grid and the target hold
/// the same non-air block. Ties resolve to the lexicographically smallest (k, dx, dz, dy).
MatchResult max_intersection(const VoxelGrid& built, const VoxelGrid& target);

/// Rotates by k quarter turns and shifts by `offset`; cells leaving the zone are dropped.
VoxelGrid transform(const VoxelGrid& grid, int rotation, Offset offset);

/// Color matches and occupancy overlap for one alignment of built onto target.
struct Alignment {
  int score = 0;
  int overlap = 0;
  int rotation = 0;
  Offset offset{};
};

/// Among alignments with the maximal score, the one with the largest occupancy overlap
/// (then lexicographically smallest). Inverse transforms preserve both counts, so the
/// chosen pair of counts is the same for (a, b) and (b, a).
Alignment closest_alignment(const VoxelGrid& built, const VoxelGrid& target);

}  // namespace gridcraft
