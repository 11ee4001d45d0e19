#include "gridcraft/task.hpp"

#include "gridcraft/errors.hpp"

namespace gridcraft {

std::string_view to_string(Speaker speaker) { return speaker == Speaker::Architect ? "architect" : "builder"; }

bool is_substructure(const VoxelGrid& part, const VoxelGrid& whole) {
  const auto a = part.raw();
  const auto b = whole.raw();
  for (std::size_t i = 0; i < kCellCount; ++i) {
    if (a[i] != 0 && a[i] != b[i]) return false;
  }
  return true;
}

std::string dialog_text(const Task& task) {
  std::string out;
  for (const auto& u : task.dialog) {
    if (!out.empty()) out.push_back('\n');
    out += u.speaker == Speaker::Architect ? "<Architect> " : "<Builder> ";
    out += u.text;
  }
  return out;
}

void validate(const Task& task) {
  if (task.id.empty()) throw ValidationError("task id is empty");
  const std::string where = "task '" + task.id + "': ";
  if (task.target.nonair() == 0) throw ValidationError(where + "target has no blocks");
  for (std::size_t i = 0; i < task.dialog.size(); ++i) {
    if (task.dialog[i].text.empty()) {
      throw ValidationError(where + "dialog[" + std::to_string(i) + "].text is empty");
    }
  }
  for (std::size_t i = 0; i < task.subgoals.size(); ++i) {
    const auto& sg = task.subgoals[i];
    const VoxelGrid& next = i + 1 < task.subgoals.size() ? task.subgoals[i + 1].grid : task.target;
    if (!is_substructure(sg.grid, next)) {
      throw ValidationError(where + "subgoals[" + std::to_string(i) + "] is not contained in the " +
                            (i + 1 < task.subgoals.size() ? "next sub-goal" : "target"));
    }
    if (sg.utterance && (*sg.utterance < 0 || static_cast<std::size_t>(*sg.utterance) >= task.dialog.size())) {
      throw ValidationError(where + "subgoals[" + std::to_string(i) + "].utterance out of range");
    }
  }
  if (!task.subgoals.empty() && !(task.subgoals.back().grid == task.target)) {
    throw ValidationError(where + "last sub-goal differs from the target");
  }
}

std::vector<VoxelGrid> subgoal_grids(const Task& task) {
  if (task.subgoals.empty()) return {task.target};
  std::vector<VoxelGrid> out;
  out.reserve(task.subgoals.size());
  for (const auto& sg : task.subgoals) out.push_back(sg.grid);
  return out;
}

}  // namespace gridcraft
