#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gridcraft/dynamics.hpp"
#include "gridcraft/matcher.hpp"
#include "gridcraft/render.hpp"
#include "gridcraft/reward.hpp"
#include "gridcraft/subgoals.hpp"
#include "gridcraft/task.hpp"

namespace gridcraft {

struct EnvConfig {
  std::optional<int> horizon;  ///< per-mode default when unset
  Inventory inventory{};
  RewardConfig reward{};
  DynamicsConfig dynamics{};
  RenderConfig render_config{};
  bool render = true;
};

/// 5000 human-level, 500 discrete, 2000 continuous.
int default_horizon(ControlMode mode);

enum class Termination { Running, OutOfZone, StepLimit, Completed };

std::string_view to_string(Termination t);
Termination termination_from_string(std::string_view name);

struct Observation {
  static constexpr std::array<int, 3> kPovShape = {kPovHeight, kPovWidth, kPovChannels};
  static constexpr std::array<int, 1> kInventoryShape = {kNumColors};
  static constexpr std::array<int, 3> kZoneShape = {kZoneX, kZoneZ, kZoneY};
  static constexpr std::array<int, 1> kPoseShape = {5};

  PovImage pov{};  ///< all zero when rendering is off
  std::array<int, kNumColors> inventory{};
  VoxelGrid zone;
  std::string dialog;
  std::array<double, 5> pose{};  ///< x, y, z, pitch, yaw

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// 64-bit FNV-1a over every observation field, as 16 hex digits.
std::string observation_digest(const Observation& obs);

struct StepInfo {
  MatchResult match;
  int steps = 0;
  Termination termination = Termination::Running;
  StructureEvent event = StructureEvent::None;
  int subgoals_completed = 0;
};

struct StepResult {
  Observation observation;
  int reward = 0;
  bool done = false;
  StepInfo info;
};

/// One building episode at a time. Not safe for concurrent use; separate instances are independent.
class Environment {
 public:
  explicit Environment(EnvConfig cfg = {});

  /// Throws InvalidTask when the target is empty or the initial world blocks the spawn point.
  Observation reset(const Task& task, ControlMode mode, std::uint64_t seed);

  /// Throws EpisodeFinished after termination and ModeMismatch for a foreign action variant;
  /// neither mutates state.
  StepResult step(const Action& action);

  Observation observe() const;

  const EnvConfig& config() const noexcept { return cfg_; }
  const Task& task() const noexcept { return task_; }
  ControlMode mode() const noexcept { return mode_; }
  std::uint64_t seed() const noexcept { return seed_; }
  int horizon() const noexcept { return horizon_; }
  int steps() const noexcept { return steps_; }
  bool done() const noexcept { return termination_ != Termination::Running; }
  Termination termination() const noexcept { return termination_; }
  const VoxelGrid& world() const noexcept { return world_; }
  const Kinematics& kinematics() const noexcept { return kinematics_; }
  const Inventory& inventory() const noexcept { return inventory_; }
  BlockId selected() const noexcept { return selected_; }
  const MatchResult& match() const noexcept { return match_; }
  const SubgoalQueue& subgoals() const noexcept { return subgoals_; }

 private:
  bool completed() const;

  EnvConfig cfg_;
  Task task_;
  int target_size_ = 0;
  ControlMode mode_ = ControlMode::Discrete;
  std::uint64_t seed_ = 0;
  int horizon_ = 0;
  bool started_ = false;
  int steps_ = 0;
  Termination termination_ = Termination::Running;
  VoxelGrid world_;
  Kinematics kinematics_;
  Inventory inventory_;
  BlockId selected_ = BlockId::Blue;
  MatchResult match_;
  SubgoalQueue subgoals_;
  std::string dialog_;
};

/// Agent feet outside [0,11] x [0,9] x [0,11] (x, y, z).
bool outside_zone(const AgentPose& pose);

}  // namespace gridcraft
