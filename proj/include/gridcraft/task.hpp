#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

enum class Speaker { Architect, Builder };

std::string_view to_string(Speaker speaker);

struct Utterance {
  Speaker speaker = Speaker::Architect;
  std::string text;
  std::optional<std::string> timestamp;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

/// Cumulative intermediate target, optionally tied to the dialog turn that asks for it.
struct Subgoal {
  VoxelGrid grid;
  std::optional<int> utterance;

  friend bool operator==(const Subgoal&, const Subgoal&) = default;
};

struct Task {
  std::string id;
  std::vector<Utterance> dialog;
  VoxelGrid target;
  std::vector<Subgoal> subgoals;
  VoxelGrid initial;

  friend bool operator==(const Task&, const Task&) = default;
};

/// True when every non-air cell of `part` holds the same block in `whole`.
bool is_substructure(const VoxelGrid& part, const VoxelGrid& whole);

/// The whole dialog as one string, one "<Speaker> text" turn per line.
std::string dialog_text(const Task& task);

/// Throws ValidationError naming the offending field.
void validate(const Task& task);

/// The sub-goal grids in order; a task without sub-goals has the target as its only one.
std::vector<VoxelGrid> subgoal_grids(const Task& task);

}  // namespace gridcraft
