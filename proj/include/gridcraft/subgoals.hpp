#pragma once

#include <cstddef>
#include <vector>

#include "gridcraft/task.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

/// Forward-only queue of cumulative sub-goals. A sub-goal is done once the built grid
/// contains it anywhere in the zone (its full block count is matched under some
/// rotation and shift); popped sub-goals never come back.
class SubgoalQueue {
 public:
  SubgoalQueue() = default;
  explicit SubgoalQueue(std::vector<VoxelGrid> goals);
  static SubgoalQueue for_task(const Task& task) { return SubgoalQueue(subgoal_grids(task)); }

  struct Advance {
    int popped = 0;
    const VoxelGrid* head = nullptr;  ///< nullptr once every sub-goal is done
  };

  Advance advance(const VoxelGrid& built);

  const VoxelGrid* head() const noexcept { return next_ < goals_.size() ? &goals_[next_] : nullptr; }
  int completed() const noexcept { return static_cast<int>(next_); }
  int total() const noexcept { return static_cast<int>(goals_.size()); }
  bool finished() const noexcept { return next_ == goals_.size(); }

 private:
  std::vector<VoxelGrid> goals_;
  std::vector<int> sizes_;
  std::size_t next_ = 0;
};

}  // namespace gridcraft
