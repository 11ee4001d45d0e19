#pragma once

#include <string_view>

#include "gridcraft/matcher.hpp"

namespace gridcraft {

/// Structural change caused by one step.
enum class StructureEvent { None, Placed, Broken };

std::string_view to_string(StructureEvent event);
StructureEvent structure_event_from_string(std::string_view name);

struct RewardConfig {
  int closer = 2;
  int farther = -2;
  int misplace = -1;
  int remove_misplaced = 1;

  friend bool operator==(const RewardConfig&, const RewardConfig&) = default;
};

/// Reward for moving from `prev` to `next`. Only the maximal match score matters:
/// a higher score pays `closer`, a lower one `farther`; an unchanged score pays
/// `misplace` for a placement, `remove_misplaced` for a removal and 0 otherwise.
constexpr int step_reward(const MatchResult& prev, const MatchResult& next, StructureEvent event,
                          const RewardConfig& cfg = {}) noexcept {
  if (next.score > prev.score) return cfg.closer;
  if (next.score < prev.score) return cfg.farther;
  switch (event) {
    case StructureEvent::Placed: return cfg.misplace;
    case StructureEvent::Broken: return cfg.remove_misplaced;
    case StructureEvent::None: break;
  }
  return 0;
}

}  // namespace gridcraft
