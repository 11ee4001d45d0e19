#pragma once

#include <cstdint>
#include <vector>

#include "gridcraft/task.hpp"

namespace gridcraft {

/// Five blue blocks on the ground forming an L.
Task l_shape_task();

/// 18 blocks: a 3x3 green base, two 2x2 layers (red, blue) and a yellow cap.
Task eighteen_block_task();

/// Blocks of `target` in build order: by height, then x, then z. For gravity-supported
/// structures every block rests on the ground or on an earlier block.
std::vector<PlacedBlock> build_order(const VoxelGrid& target);

/// True when every block sits on the ground or on another block.
bool is_supported(const VoxelGrid& grid);

/// Task with one architect instruction and one cumulative sub-goal per block, following
/// build_order. Used for both canonical and generated fixtures.
Task task_from_structure(std::string id, const VoxelGrid& target);

/// Deterministic pseudo-random connected, gravity-supported structures. Sizes are drawn
/// uniformly from [min_size, max_size]. Throws std::invalid_argument for an empty range
/// or sizes above the zone capacity.
std::vector<Task> generate_fixtures(std::uint64_t seed, int count, int min_size, int max_size);

}  // namespace gridcraft
