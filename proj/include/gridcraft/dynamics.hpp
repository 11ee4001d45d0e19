#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "gridcraft/geometry.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

enum class ControlMode { HumanLevel, Discrete, Continuous };

/// "human", "discrete", "continuous".
std::string_view to_string(ControlMode mode);
/// Throws std::invalid_argument naming the valid modes.
ControlMode control_mode_from_string(std::string_view name);

/// Feet position in block units plus view angles in degrees.
/// pitch is clamped to [-90, 90] (positive looks down), yaw wrapped to [-180, 180).
struct AgentPose {
  double x = 5.5;
  double y = 0.0;
  double z = 5.5;
  double pitch = 0.0;
  double yaw = 0.0;

  Vec3 feet() const { return {x, y, z}; }
  friend bool operator==(const AgentPose&, const AgentPose&) = default;
};

/// Pose plus the vertical velocity carried between ticks (human-level mode only).
struct Kinematics {
  AgentPose pose{};
  double vertical_velocity = 0.0;

  friend bool operator==(const Kinematics&, const Kinematics&) = default;
};

struct DynamicsConfig {
  double move_speed = 0.25;
  double gravity = 0.08;
  double terminal_fall_speed = 3.0;
  double jump_impulse = 0.42;
  double body_width = 0.6;
  double body_height = 1.8;
  double eye_height = 1.6;
  double reach = 5.0;
  double camera_clamp = 15.0;
  double discrete_turn = 15.0;
  double discrete_look = 15.0;
};

class Inventory {
 public:
  static constexpr int kDefaultCount = 20;

  Inventory() { counts_.fill(kDefaultCount); }
  explicit Inventory(std::array<int, kNumColors> counts, bool unbounded = false);
  static Inventory uniform(int count) {
    std::array<int, kNumColors> counts{};
    counts.fill(count);
    return Inventory(counts);
  }
  static Inventory unbounded() {
    std::array<int, kNumColors> counts{};
    counts.fill(kDefaultCount);
    return Inventory(counts, true);
  }

  int count(BlockId id) const { return counts_[slot(id)]; }
  bool can_place(BlockId id) const { return id != BlockId::Air && (unbounded_ || count(id) > 0); }
  /// Unbounded inventories never change.
  void take(BlockId id);
  void give(BlockId id);
  bool is_unbounded() const noexcept { return unbounded_; }
  const std::array<int, kNumColors>& counts() const noexcept { return counts_; }

  friend bool operator==(const Inventory&, const Inventory&) = default;

 private:
  static std::size_t slot(BlockId id);

  std::array<int, kNumColors> counts_{};
  bool unbounded_ = false;
};

enum class UseKind { None, Place, Break };
enum class Move { None, Forward, Back, Left, Right };

struct CameraDelta {
  double pitch = 0.0;
  double yaw = 0.0;

  friend bool operator==(const CameraDelta&, const CameraDelta&) = default;
};

/// Key/mouse emulation; moves are relative to the current yaw.
struct HumanAction {
  Move move = Move::None;
  bool jump = false;
  CameraDelta camera{};
  UseKind use = UseKind::None;
  std::optional<BlockId> hotbar;

  friend bool operator==(const HumanAction&, const HumanAction&) = default;
};

enum class DiscreteOp {
  StepNorth,
  StepSouth,
  StepEast,
  StepWest,
  TurnLeft,
  TurnRight,
  LookUp,
  LookDown,
  Jump,
  Place,
  Break,
  Select1,
  Select2,
  Select3,
  Select4,
  Select5,
  Select6,
  Noop,
};
inline constexpr int kDiscreteOpCount = 18;

std::string_view to_string(DiscreteOp op);
std::optional<DiscreteOp> discrete_op_from_string(std::string_view name);
constexpr DiscreteOp select_op(BlockId id) {
  return static_cast<DiscreteOp>(static_cast<int>(DiscreteOp::Select1) + to_int(id) - 1);
}

/// Cell-center stepping: north is -z, east is +x.
struct DiscreteAction {
  DiscreteOp op = DiscreteOp::Noop;

  friend bool operator==(const DiscreteAction&, const DiscreteAction&) = default;
};

/// Free flight; `shift` is a world-frame (x, y, z) displacement, each component clamped to +-1.
struct ContinuousAction {
  std::array<double, 3> shift{};
  CameraDelta camera{};
  UseKind use = UseKind::None;
  std::optional<BlockId> hotbar;

  friend bool operator==(const ContinuousAction&, const ContinuousAction&) = default;
};

using Action = std::variant<HumanAction, DiscreteAction, ContinuousAction>;

ControlMode mode_of(const Action& action);
/// The action's build/break request, if any.
UseKind use_of(const Action& action);
/// Hotbar selection carried by the action, if any.
std::optional<BlockId> selection_of(const Action& action);
Action noop_action(ControlMode mode);

/// True when the agent's box at `feet` overlaps a block or dips below the ground plane.
bool body_collides(Vec3 feet, const VoxelGrid& grid, const DynamicsConfig& cfg = {});

/// True when the box at `feet` overlaps `cell`.
bool body_overlaps_cell(Vec3 feet, const CellCoord& cell, const DynamicsConfig& cfg = {});

/// Advances the agent by one tick. Blocked axes keep their previous value, except that
/// vertical motion under gravity stops at the contact surface.
Kinematics apply_motion(const Kinematics& state, const VoxelGrid& grid, const Action& action, ControlMode mode,
                        const DynamicsConfig& cfg = {});

struct UseMiss {
  friend bool operator==(const UseMiss&, const UseMiss&) = default;
};
struct UsePlaced {
  CellCoord cell;
  BlockId id;
  friend bool operator==(const UsePlaced&, const UsePlaced&) = default;
};
struct UseBroken {
  CellCoord cell;
  BlockId id;
  friend bool operator==(const UseBroken&, const UseBroken&) = default;
};
using UseOutcome = std::variant<UseMiss, UsePlaced, UseBroken>;

/// Casts the crosshair ray from the eye up to `cfg.reach`. Break takes the first block hit;
/// place fills the empty cell in front of the hit face, where the ground plane counts as a
/// face inside the zone footprint. Anything else is a miss.
UseOutcome resolve_use(const AgentPose& pose, const VoxelGrid& grid, UseKind use, BlockId selected,
                       const Inventory& inventory, const DynamicsConfig& cfg = {});

}  // namespace gridcraft
