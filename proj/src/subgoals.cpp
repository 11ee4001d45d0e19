#include "gridcraft/subgoals.hpp"

#include "gridcraft/matcher.hpp"

namespace gridcraft {

SubgoalQueue::SubgoalQueue(std::vector<VoxelGrid> goals) : goals_(std::move(goals)) {
  sizes_.reserve(goals_.size());
  for (const auto& g : goals_) sizes_.push_back(g.nonair());
}

SubgoalQueue::Advance SubgoalQueue::advance(const VoxelGrid& built) {
  Advance result;
  while (next_ < goals_.size() && max_intersection(built, goals_[next_]).score == sizes_[next_]) {
    ++next_;
    ++result.popped;
  }
  result.head = head();
  return result;
}

}  // namespace gridcraft
