#include "gridcraft/voxel_grid.hpp"

#include <algorithm>
#include <sstream>

#include "gridcraft/errors.hpp"

namespace gridcraft {

namespace {

constexpr std::array<std::string_view, kNumColors + 1> kColorNames = {
    "air", "blue", "red", "green", "orange", "purple", "yellow"};

}  // namespace

BlockId block_from_int(int value) {
  if (!is_valid_block(value)) throw std::out_of_range("block id " + std::to_string(value) + " outside 0..6");
  return static_cast<BlockId>(value);
}

std::string_view color_name(BlockId id) { return kColorNames[static_cast<std::size_t>(id)]; }

std::optional<BlockId> block_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kColorNames.size(); ++i) {
    if (kColorNames[i] == name) return static_cast<BlockId>(i);
  }
  return std::nullopt;
}

std::string to_string(const CellCoord& cell) {
  std::ostringstream out;
  out << '(' << cell.x() << ", " << cell.z() << ", " << cell.y() << ')';
  return out.str();
}

VoxelGrid VoxelGrid::from_flat(std::span<const int> values) {
  if (values.size() != kCellCount) {
    throw std::invalid_argument("flat grid needs " + std::to_string(kCellCount) + " values, got " +
                                std::to_string(values.size()));
  }
  VoxelGrid grid;
  for (std::size_t i = 0; i < kCellCount; ++i) {
    if (!is_valid_block(values[i])) {
      throw std::invalid_argument("invalid block id " + std::to_string(values[i]) + " at flat index " +
                                  std::to_string(i));
    }
    grid.cells_[i] = static_cast<std::uint8_t>(values[i]);
  }
  return grid;
}

int VoxelGrid::nonair() const noexcept {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](std::uint8_t v) { return v != 0; }));
}

std::vector<PlacedBlock> VoxelGrid::blocks() const {
  std::vector<PlacedBlock> out;
  for (std::size_t i = 0; i < kCellCount; ++i) {
    if (cells_[i] != 0) out.push_back({CellCoord::from_index(i), static_cast<BlockId>(cells_[i])});
  }
  return out;
}

std::vector<int> VoxelGrid::to_flat() const { return {cells_.begin(), cells_.end()}; }

VoxelGrid place_block(const VoxelGrid& grid, const CellCoord& cell, BlockId id) {
  if (id == BlockId::Air) throw AirBlock("cannot place air at " + to_string(cell));
  if (grid.at(cell) != BlockId::Air) throw OccupiedCell("cell " + to_string(cell) + " is occupied");
  VoxelGrid out = grid;
  out.set(cell, id);
  return out;
}

std::pair<VoxelGrid, BlockId> break_block(const VoxelGrid& grid, const CellCoord& cell) {
  const BlockId removed = grid.at(cell);
  if (removed == BlockId::Air) throw AirCell("cell " + to_string(cell) + " holds no block");
  VoxelGrid out = grid;
  out.set(cell, BlockId::Air);
  return {out, removed};
}

VoxelGrid rotate_y(const VoxelGrid& grid, int k) {
  k = ((k % 4) + 4) % 4;
  if (k == 0) return grid;
  VoxelGrid out;
  for (const auto& [cell, id] : grid.blocks()) {
    const auto [rx, rz] = rotate_column(cell.x(), cell.z(), k);
    out.set(CellCoord(rx, rz, cell.y()), id);
  }
  return out;
}

std::array<int, kZoneY> layer_counts(const VoxelGrid& grid) {
  std::array<int, kZoneY> counts{};
  for (const auto& block : grid.blocks()) ++counts[static_cast<std::size_t>(block.cell.y())];
  return counts;
}

std::string to_text(const VoxelGrid& grid) {
  std::string out;
  out.reserve(kZoneY * (kZoneZ * (kZoneX + 1) + 1));
  for (int y = 0; y < kZoneY; ++y) {
    if (y > 0) out.push_back('\n');
    for (int z = 0; z < kZoneZ; ++z) {
      for (int x = 0; x < kZoneX; ++x) out.push_back(static_cast<char>('0' + to_int(grid.at(CellCoord(x, z, y)))));
      out.push_back('\n');
    }
  }
  return out;
}

VoxelGrid grid_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  constexpr std::size_t kExpected = kZoneY * kZoneZ + (kZoneY - 1);
  if (lines.size() != kExpected) {
    throw ParseError("grid literal needs " + std::to_string(kExpected) + " lines, got " +
                     std::to_string(lines.size()));
  }

  VoxelGrid grid;
  std::size_t row = 0;
  for (int y = 0; y < kZoneY; ++y) {
    if (y > 0) {
      if (!lines[row].empty()) throw ParseError("expected blank line between layers", row + 1);
      ++row;
    }
    for (int z = 0; z < kZoneZ; ++z, ++row) {
      const std::string_view line = lines[row];
      if (line.size() != static_cast<std::size_t>(kZoneX)) {
        throw ParseError("row needs " + std::to_string(kZoneX) + " digits", row + 1);
      }
      for (int x = 0; x < kZoneX; ++x) {
        const char c = line[static_cast<std::size_t>(x)];
        if (c < '0' || c > '0' + kNumColors) throw ParseError(std::string("invalid block digit '") + c + "'", row + 1);
        grid.set(CellCoord(x, z, y), static_cast<BlockId>(c - '0'));
      }
    }
  }
  return grid;
}

}  // namespace gridcraft
