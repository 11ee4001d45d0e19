#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridcraft/dynamics.hpp"
#include "gridcraft/environment.hpp"
#include "gridcraft/matcher.hpp"
#include "gridcraft/reward.hpp"

namespace gridcraft {

struct StepRecord {
  Action action;
  int reward = 0;
  StructureEvent event = StructureEvent::None;
  MatchResult match;
  std::string digest;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct EpisodeRecord {
  int episode = 0;
  std::string task_id;
  ControlMode mode = ControlMode::Discrete;
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
  VoxelGrid final_grid;
  Termination termination = Termination::Running;
  double rho = 1.0;
  int subgoals_completed = 0;

  int total_return() const;
  bool success() const { return termination == Termination::Completed; }

  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

/// episodes.jsonl holds, per episode, one header line, one line per step and one closing line:
///   {"kind":"episode","episode":0,"task_id":"l-shape","mode":"discrete","seed":7}
///   {"kind":"step","episode":0,"t":1,"action":{...},"reward":2,"event":"placed",
///    "match":{"score":1,"rotation":0,"offset":[0,0,0]},"digest":"..."}
///   {"kind":"end","episode":0,"steps":12,"return":10,"termination":"completed",
///    "rho":0.0,"subgoals_completed":5,"final_grid":[...]}
void write_episode(std::ostream& out, const EpisodeRecord& record);
std::vector<EpisodeRecord> read_episodes(std::istream& in);
std::vector<EpisodeRecord> load_episodes(const std::filesystem::path& path);

}  // namespace gridcraft
