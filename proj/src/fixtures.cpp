#include "gridcraft/fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gridcraft/rng.hpp"

namespace gridcraft {

namespace {

std::string instruction_for(const PlacedBlock& b, bool first) {
  std::string text = first ? "start with a " : "now place a ";
  text += color_name(b.id);
  text += " block at column " + std::to_string(b.cell.x()) + ", row " + std::to_string(b.cell.z());
  if (b.cell.y() == 0) {
    text += " on the ground";
  } else {
    text += ", on top of the block below, level " + std::to_string(b.cell.y());
  }
  return text;
}

}  // namespace

std::vector<PlacedBlock> build_order(const VoxelGrid& target) {
  auto blocks = target.blocks();
  std::stable_sort(blocks.begin(), blocks.end(), [](const PlacedBlock& a, const PlacedBlock& b) {
    return std::tuple(a.cell.y(), a.cell.x(), a.cell.z()) < std::tuple(b.cell.y(), b.cell.x(), b.cell.z());
  });
  return blocks;
}

bool is_supported(const VoxelGrid& grid) {
  for (const auto& [cell, id] : grid.blocks()) {
    if (cell.y() > 0 && grid.at(CellCoord(cell.x(), cell.z(), cell.y() - 1)) == BlockId::Air) return false;
  }
  return true;
}

Task task_from_structure(std::string id, const VoxelGrid& target) {
  Task task;
  task.id = std::move(id);
  task.target = target;
  VoxelGrid cumulative;
  const auto order = build_order(target);
  for (std::size_t i = 0; i < order.size(); ++i) {
    task.dialog.push_back({Speaker::Architect, instruction_for(order[i], i == 0), std::nullopt});
    cumulative.set(order[i].cell, order[i].id);
    task.subgoals.push_back({cumulative, static_cast<int>(task.dialog.size()) - 1});
  }
  task.dialog.push_back({Speaker::Builder, "done", std::nullopt});
  return task;
}

Task l_shape_task() {
  VoxelGrid g;
  for (const auto& [x, z] : {std::pair{4, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 6}}) g.set(CellCoord(x, z, 0), BlockId::Blue);
  return task_from_structure("l-shape-5", g);
}

Task eighteen_block_task() {
  VoxelGrid g;
  for (int x = 4; x <= 6; ++x) {
    for (int z = 4; z <= 6; ++z) g.set(CellCoord(x, z, 0), BlockId::Green);
  }
  for (int x = 4; x <= 5; ++x) {
    for (int z = 4; z <= 5; ++z) {
      g.set(CellCoord(x, z, 1), BlockId::Red);
      g.set(CellCoord(x, z, 2), BlockId::Blue);
    }
  }
  g.set(CellCoord(4, 4, 3), BlockId::Yellow);
  return task_from_structure("tower-18", g);
}

std::vector<Task> generate_fixtures(std::uint64_t seed, int count, int min_size, int max_size) {
  if (count < 0) throw std::invalid_argument("fixture count must be non-negative");
  if (min_size < 1 || min_size > max_size) throw std::invalid_argument("fixture size range is empty");
  if (max_size > static_cast<int>(kCellCount)) {
    throw std::invalid_argument("fixture size " + std::to_string(max_size) + " exceeds the zone capacity of " +
                                std::to_string(kCellCount));
  }

  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
    const int size = rng.between(min_size, max_size);

    VoxelGrid grid;
    std::vector<PlacedBlock> placed;
    const CellCoord start(rng.between(3, 7), rng.between(3, 7), 0);
    placed.push_back({start, static_cast<BlockId>(rng.between(1, kNumColors))});
    grid.set(start, placed.back().id);

    while (static_cast<int>(placed.size()) < size) {
      // Empty, supported cells next to the structure (sides or directly above).
      std::set<std::size_t> frontier;
      for (const auto& b : placed) {
        constexpr int kDirs[5][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}};
        for (const auto& d : kDirs) {
          const auto next = CellCoord::checked(b.cell.x() + d[0], b.cell.z() + d[1], b.cell.y() + d[2]);
          if (!next || grid.at(*next) != BlockId::Air) continue;
          if (next->y() > 0 && grid.at(CellCoord(next->x(), next->z(), next->y() - 1)) == BlockId::Air) continue;
          frontier.insert(next->index());
        }
      }
      const auto pick = static_cast<std::ptrdiff_t>(rng.below(frontier.size()));
      const CellCoord cell = CellCoord::from_index(*std::next(frontier.begin(), pick));
      // Runs of one color read more like real structures.
      const BlockId color = rng.chance(0.5) ? placed.back().id : static_cast<BlockId>(rng.between(1, kNumColors));
      grid.set(cell, color);
      placed.push_back({cell, color});
    }
    tasks.push_back(task_from_structure("synthetic-" + std::to_string(seed) + "-" + std::to_string(n), grid));
  }
  return tasks;
}

}  // namespace gridcraft
