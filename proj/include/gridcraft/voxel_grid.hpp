#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridcraft {

// Building zone extents in block units. Cells are indexed (x, z, y) with y up.
inline constexpr int kZoneX = 11;
inline constexpr int kZoneZ = 11;
inline constexpr int kZoneY = 9;
inline constexpr std::size_t kCellCount = static_cast<std::size_t>(kZoneX) * kZoneZ * kZoneY;
inline constexpr int kNumColors = 6;

enum class BlockId : std::uint8_t { Air = 0, Blue = 1, Red = 2, Green = 3, Orange = 4, Purple = 5, Yellow = 6 };

constexpr bool is_valid_block(int value) { return value >= 0 && value <= kNumColors; }
constexpr int to_int(BlockId id) { return static_cast<int>(id); }

/// Throws std::out_of_range for values outside 0..=6.
BlockId block_from_int(int value);

std::string_view color_name(BlockId id);
std::optional<BlockId> block_from_name(std::string_view name);

/// A cell inside the building zone. Construction rejects out-of-bounds coordinates.
class CellCoord {
 public:
  constexpr CellCoord(int x, int z, int y) : x_(x), z_(z), y_(y) {
    if (!in_bounds(x, z, y)) throw std::out_of_range("cell coordinate outside the building zone");
  }

  static constexpr bool in_bounds(int x, int z, int y) noexcept {
    return x >= 0 && x < kZoneX && z >= 0 && z < kZoneZ && y >= 0 && y < kZoneY;
  }

  static constexpr std::optional<CellCoord> checked(int x, int z, int y) noexcept {
    if (!in_bounds(x, z, y)) return std::nullopt;
    return CellCoord(x, z, y, Unchecked{});
  }

  static constexpr CellCoord from_index(std::size_t index) noexcept {
    const int y = static_cast<int>(index % kZoneY);
    const int z = static_cast<int>((index / kZoneY) % kZoneZ);
    const int x = static_cast<int>(index / (static_cast<std::size_t>(kZoneY) * kZoneZ));
    return CellCoord(x, z, y, Unchecked{});
  }

  constexpr int x() const noexcept { return x_; }
  constexpr int z() const noexcept { return z_; }
  constexpr int y() const noexcept { return y_; }

  /// Row-major offset for shape (11, 11, 9).
  constexpr std::size_t index() const noexcept {
    return (static_cast<std::size_t>(x_) * kZoneZ + static_cast<std::size_t>(z_)) * kZoneY +
           static_cast<std::size_t>(y_);
  }

  friend constexpr bool operator==(const CellCoord&, const CellCoord&) = default;

 private:
  struct Unchecked {};
  constexpr CellCoord(int x, int z, int y, Unchecked) noexcept : x_(x), z_(z), y_(y) {}

  int x_;
  int z_;
  int y_;
};

std::string to_string(const CellCoord& cell);

/// A non-air cell and its block, as listed by VoxelGrid::blocks().
struct PlacedBlock {
  CellCoord cell;
  BlockId id;
};

/// Dense 11x11x9 grid of block ids; value type.
class VoxelGrid {
 public:
  VoxelGrid() = default;

  /// Flat row-major (x, z, y) values; throws std::invalid_argument on bad size or ids.
  static VoxelGrid from_flat(std::span<const int> values);

  BlockId at(const CellCoord& cell) const noexcept { return static_cast<BlockId>(cells_[cell.index()]); }
  BlockId operator[](const CellCoord& cell) const noexcept { return at(cell); }

  /// In-place write; the free functions below are the pure interface.
  void set(const CellCoord& cell, BlockId id) noexcept { cells_[cell.index()] = static_cast<std::uint8_t>(id); }

  int nonair() const noexcept;
  bool empty() const noexcept { return nonair() == 0; }

  std::vector<PlacedBlock> blocks() const;
  std::vector<int> to_flat() const;
  std::span<const std::uint8_t, kCellCount> raw() const noexcept { return cells_; }

  friend bool operator==(const VoxelGrid&, const VoxelGrid&) = default;

 private:
  std::array<std::uint8_t, kCellCount> cells_{};
};

/// Returns a copy with `id` at `cell`. Throws AirBlock for id 0, OccupiedCell if taken.
VoxelGrid place_block(const VoxelGrid& grid, const CellCoord& cell, BlockId id);

/// Returns the grid with `cell` cleared and the removed id. Throws AirCell if empty.
std::pair<VoxelGrid, BlockId> break_block(const VoxelGrid& grid, const CellCoord& cell);

/// Maps a footprint column by k quarter turns about the vertical axis: (x, z) -> (z, 10 - x) per turn.
constexpr std::pair<int, int> rotate_column(int x, int z, int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 1: return {z, kZoneX - 1 - x};
    case 2: return {kZoneX - 1 - x, kZoneZ - 1 - z};
    case 3: return {kZoneZ - 1 - z, x};
    default: return {x, z};
  }
}

VoxelGrid rotate_y(const VoxelGrid& grid, int k);

/// Block counts per horizontal layer, index = y.
std::array<int, kZoneY> layer_counts(const VoxelGrid& grid);

/// Text literal: 9 layers (y = 0 upward) of 11 lines (z rows) of 11 digits (x columns),
/// layers separated by one blank line.
std::string to_text(const VoxelGrid& grid);

/// Parses the text literal; throws ParseError with a 1-based line number.
VoxelGrid grid_from_text(std::string_view text);

}  // namespace gridcraft
