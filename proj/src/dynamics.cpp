#include "gridcraft/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gridcraft {

namespace {

// Boxes that merely touch a cell face do not overlap it.
constexpr double kTouchEps = 1e-9;

constexpr std::array<std::string_view, kDiscreteOpCount> kDiscreteOpNames = {
    "step_north", "step_south", "step_east", "step_west", "turn_left", "turn_right",
    "look_up",    "look_down",  "jump",      "place",     "break",     "select_1",
    "select_2",   "select_3",   "select_4",  "select_5",  "select_6",  "noop"};

struct CellRange {
  int lo;
  int hi;  // inclusive
};

CellRange covered(double lo, double hi) {
  return {static_cast<int>(std::floor(lo + kTouchEps)), static_cast<int>(std::ceil(hi - kTouchEps)) - 1};
}

bool solid(const VoxelGrid& grid, int x, int y, int z) {
  const auto cell = CellCoord::checked(x, z, y);
  return cell && grid.at(*cell) != BlockId::Air;
}

double wrap_yaw(double yaw) {
  double r = std::fmod(yaw + 180.0, 360.0);
  if (r < 0.0) r += 360.0;
  return r - 180.0;
}

void turn_camera(AgentPose& pose, CameraDelta delta, double clamp) {
  pose.pitch = std::clamp(pose.pitch + std::clamp(delta.pitch, -clamp, clamp), -90.0, 90.0);
  pose.yaw = wrap_yaw(pose.yaw + std::clamp(delta.yaw, -clamp, clamp));
}

// Moves one axis at a time; a colliding axis keeps its old coordinate.
void slide(AgentPose& pose, const VoxelGrid& grid, Vec3 delta, const DynamicsConfig& cfg) {
  if (delta.x != 0.0) {
    const Vec3 next{pose.x + delta.x, pose.y, pose.z};
    if (!body_collides(next, grid, cfg)) pose.x = next.x;
  }
  if (delta.y != 0.0) {
    const Vec3 next{pose.x, pose.y + delta.y, pose.z};
    if (!body_collides(next, grid, cfg)) pose.y = next.y;
  }
  if (delta.z != 0.0) {
    const Vec3 next{pose.x, pose.y, pose.z + delta.z};
    if (!body_collides(next, grid, cfg)) pose.z = next.z;
  }
}

bool supported(const AgentPose& pose, const VoxelGrid& grid, const DynamicsConfig& cfg) {
  if (pose.y == 0.0) return true;
  if (pose.y != std::floor(pose.y)) return false;
  const double hw = cfg.body_width / 2.0;
  const auto xs = covered(pose.x - hw, pose.x + hw);
  const auto zs = covered(pose.z - hw, pose.z + hw);
  const int below = static_cast<int>(pose.y) - 1;
  for (int x = xs.lo; x <= xs.hi; ++x) {
    for (int z = zs.lo; z <= zs.hi; ++z) {
      if (solid(grid, x, below, z)) return true;
    }
  }
  return false;
}

// Vertical move by `dy`, stopping at the first floor or ceiling crossed. Returns true on contact.
bool move_vertical(AgentPose& pose, const VoxelGrid& grid, double dy, const DynamicsConfig& cfg) {
  const double hw = cfg.body_width / 2.0;
  const auto xs = covered(pose.x - hw, pose.x + hw);
  const auto zs = covered(pose.z - hw, pose.z + hw);
  const double target = pose.y + dy;
  if (dy < 0.0) {
    // Highest block top in (target, y], or the ground plane.
    double floor_y = target < 0.0 ? 0.0 : -1.0;
    const int top_layer = static_cast<int>(std::floor(pose.y + kTouchEps)) - 1;
    for (int layer = top_layer; layer >= 0 && layer + 1 > target; --layer) {
      for (int x = xs.lo; x <= xs.hi; ++x) {
        for (int z = zs.lo; z <= zs.hi; ++z) {
          if (solid(grid, x, layer, z)) floor_y = std::max(floor_y, static_cast<double>(layer + 1));
        }
      }
    }
    if (floor_y >= 0.0) {
      pose.y = floor_y;
      return true;
    }
  } else if (dy > 0.0) {
    const double head = pose.y + cfg.body_height;
    const int first = static_cast<int>(std::ceil(head - kTouchEps));
    for (int layer = first; layer < kZoneY && layer < target + cfg.body_height; ++layer) {
      for (int x = xs.lo; x <= xs.hi; ++x) {
        for (int z = zs.lo; z <= zs.hi; ++z) {
          if (solid(grid, x, layer, z)) {
            pose.y = static_cast<double>(layer) - cfg.body_height;
            return true;
          }
        }
      }
    }
  }
  pose.y = target;
  return false;
}

Kinematics step_human(Kinematics state, const VoxelGrid& grid, const HumanAction& action,
                      const DynamicsConfig& cfg) {
  AgentPose& pose = state.pose;
  turn_camera(pose, action.camera, cfg.camera_clamp);

  const auto [sy, cy] = sin_cos_deg(pose.yaw);
  Vec3 dir{};
  switch (action.move) {
    case Move::Forward: dir = {-sy, 0.0, cy}; break;
    case Move::Back: dir = {sy, 0.0, -cy}; break;
    case Move::Right: dir = {-cy, 0.0, -sy}; break;
    case Move::Left: dir = {cy, 0.0, sy}; break;
    case Move::None: break;
  }
  slide(pose, grid, cfg.move_speed * dir, cfg);

  double& vy = state.vertical_velocity;
  const bool grounded = supported(pose, grid, cfg);
  if (grounded && action.jump) {
    vy = cfg.jump_impulse;
  } else if (grounded && vy <= 0.0) {
    vy = 0.0;
    return state;
  }
  if (move_vertical(pose, grid, vy, cfg)) {
    vy = 0.0;
  } else {
    vy = std::max(vy - cfg.gravity, -cfg.terminal_fall_speed);
  }
  return state;
}

// Lands on the highest block top at or below the feet in the current column.
void settle(AgentPose& pose, const VoxelGrid& grid) {
  const int x = static_cast<int>(std::floor(pose.x));
  const int z = static_cast<int>(std::floor(pose.z));
  int layer = std::min(static_cast<int>(pose.y), kZoneY) - 1;
  while (layer >= 0 && !solid(grid, x, layer, z)) --layer;
  pose.y = static_cast<double>(layer + 1);
}

Kinematics step_discrete(Kinematics state, const VoxelGrid& grid, DiscreteOp op, const DynamicsConfig& cfg) {
  AgentPose& pose = state.pose;
  int dx = 0;
  int dz = 0;
  switch (op) {
    case DiscreteOp::StepNorth: dz = -1; break;
    case DiscreteOp::StepSouth: dz = 1; break;
    case DiscreteOp::StepEast: dx = 1; break;
    case DiscreteOp::StepWest: dx = -1; break;
    case DiscreteOp::TurnLeft: pose.yaw = wrap_yaw(pose.yaw - cfg.discrete_turn); return state;
    case DiscreteOp::TurnRight: pose.yaw = wrap_yaw(pose.yaw + cfg.discrete_turn); return state;
    case DiscreteOp::LookUp: pose.pitch = std::max(pose.pitch - cfg.discrete_look, -90.0); return state;
    case DiscreteOp::LookDown: pose.pitch = std::min(pose.pitch + cfg.discrete_look, 90.0); return state;
    case DiscreteOp::Jump: {
      const Vec3 up{pose.x, pose.y + 1.0, pose.z};
      if (!body_collides(up, grid, cfg)) pose.y = up.y;
      return state;
    }
    default: return state;
  }

  const Vec3 level{pose.x + dx, pose.y, pose.z + dz};
  const Vec3 raised{pose.x + dx, pose.y + 1.0, pose.z + dz};
  if (!body_collides(level, grid, cfg)) {
    pose.x = level.x;
    pose.z = level.z;
  } else if (!body_collides(raised, grid, cfg) && !body_collides({pose.x, pose.y + 1.0, pose.z}, grid, cfg)) {
    pose.x = raised.x;
    pose.y = raised.y;
    pose.z = raised.z;
  } else {
    return state;
  }
  settle(pose, grid);
  return state;
}

Kinematics step_continuous(Kinematics state, const VoxelGrid& grid, const ContinuousAction& action,
                           const DynamicsConfig& cfg) {
  turn_camera(state.pose, action.camera, cfg.camera_clamp);
  const Vec3 shift{std::clamp(action.shift[0], -1.0, 1.0), std::clamp(action.shift[1], -1.0, 1.0),
                   std::clamp(action.shift[2], -1.0, 1.0)};
  slide(state.pose, grid, shift, cfg);
  return state;
}

}  // namespace

std::string_view to_string(ControlMode mode) {
  switch (mode) {
    case ControlMode::HumanLevel: return "human";
    case ControlMode::Discrete: return "discrete";
    case ControlMode::Continuous: return "continuous";
  }
  return "discrete";
}

ControlMode control_mode_from_string(std::string_view name) {
  if (name == "human") return ControlMode::HumanLevel;
  if (name == "discrete") return ControlMode::Discrete;
  if (name == "continuous") return ControlMode::Continuous;
  throw std::invalid_argument("unknown control mode '" + std::string(name) +
                              "' (valid modes: human, discrete, continuous)");
}

Inventory::Inventory(std::array<int, kNumColors> counts, bool unbounded) : counts_(counts), unbounded_(unbounded) {
  for (const int c : counts_) {
    if (c < 0) throw std::invalid_argument("inventory counts must be non-negative");
  }
}

std::size_t Inventory::slot(BlockId id) {
  if (id == BlockId::Air) throw std::invalid_argument("inventory has no slot for air");
  return static_cast<std::size_t>(to_int(id) - 1);
}

void Inventory::take(BlockId id) {
  if (unbounded_) return;
  int& c = counts_[slot(id)];
  if (c == 0) throw std::logic_error("inventory exhausted for " + std::string(color_name(id)));
  --c;
}

void Inventory::give(BlockId id) {
  if (!unbounded_) ++counts_[slot(id)];
}

std::string_view to_string(DiscreteOp op) { return kDiscreteOpNames[static_cast<std::size_t>(op)]; }

std::optional<DiscreteOp> discrete_op_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kDiscreteOpNames.size(); ++i) {
    if (kDiscreteOpNames[i] == name) return static_cast<DiscreteOp>(i);
  }
  return std::nullopt;
}

ControlMode mode_of(const Action& action) {
  switch (action.index()) {
    case 0: return ControlMode::HumanLevel;
    case 1: return ControlMode::Discrete;
    default: return ControlMode::Continuous;
  }
}

UseKind use_of(const Action& action) {
  if (const auto* d = std::get_if<DiscreteAction>(&action)) {
    if (d->op == DiscreteOp::Place) return UseKind::Place;
    if (d->op == DiscreteOp::Break) return UseKind::Break;
    return UseKind::None;
  }
  if (const auto* h = std::get_if<HumanAction>(&action)) return h->use;
  return std::get<ContinuousAction>(action).use;
}

std::optional<BlockId> selection_of(const Action& action) {
  if (const auto* d = std::get_if<DiscreteAction>(&action)) {
    const int op = static_cast<int>(d->op);
    if (op >= static_cast<int>(DiscreteOp::Select1) && op <= static_cast<int>(DiscreteOp::Select6)) {
      return static_cast<BlockId>(op - static_cast<int>(DiscreteOp::Select1) + 1);
    }
    return std::nullopt;
  }
  if (const auto* h = std::get_if<HumanAction>(&action)) return h->hotbar;
  return std::get<ContinuousAction>(action).hotbar;
}

Action noop_action(ControlMode mode) {
  switch (mode) {
    case ControlMode::HumanLevel: return HumanAction{};
    case ControlMode::Continuous: return ContinuousAction{};
    case ControlMode::Discrete: break;
  }
  return DiscreteAction{DiscreteOp::Noop};
}

bool body_collides(Vec3 feet, const VoxelGrid& grid, const DynamicsConfig& cfg) {
  if (feet.y < -kTouchEps) return true;
  const double hw = cfg.body_width / 2.0;
  const auto xs = covered(feet.x - hw, feet.x + hw);
  const auto ys = covered(feet.y, feet.y + cfg.body_height);
  const auto zs = covered(feet.z - hw, feet.z + hw);
  for (int x = std::max(xs.lo, 0); x <= std::min(xs.hi, kZoneX - 1); ++x) {
    for (int z = std::max(zs.lo, 0); z <= std::min(zs.hi, kZoneZ - 1); ++z) {
      for (int y = std::max(ys.lo, 0); y <= std::min(ys.hi, kZoneY - 1); ++y) {
        if (grid.at(CellCoord(x, z, y)) != BlockId::Air) return true;
      }
    }
  }
  return false;
}

bool body_overlaps_cell(Vec3 feet, const CellCoord& cell, const DynamicsConfig& cfg) {
  const double hw = cfg.body_width / 2.0;
  const auto xs = covered(feet.x - hw, feet.x + hw);
  const auto ys = covered(feet.y, feet.y + cfg.body_height);
  const auto zs = covered(feet.z - hw, feet.z + hw);
  return cell.x() >= xs.lo && cell.x() <= xs.hi && cell.y() >= ys.lo && cell.y() <= ys.hi && cell.z() >= zs.lo &&
         cell.z() <= zs.hi;
}

Kinematics apply_motion(const Kinematics& state, const VoxelGrid& grid, const Action& action, ControlMode mode,
                        const DynamicsConfig& cfg) {
  if (mode_of(action) != mode) throw std::invalid_argument("action variant does not match the control mode");
  switch (mode) {
    case ControlMode::HumanLevel: return step_human(state, grid, std::get<HumanAction>(action), cfg);
    case ControlMode::Discrete: return step_discrete(state, grid, std::get<DiscreteAction>(action).op, cfg);
    case ControlMode::Continuous: return step_continuous(state, grid, std::get<ContinuousAction>(action), cfg);
  }
  return state;
}

UseOutcome resolve_use(const AgentPose& pose, const VoxelGrid& grid, UseKind use, BlockId selected,
                       const Inventory& inventory, const DynamicsConfig& cfg) {
  if (use == UseKind::None) return UseMiss{};
  if (use == UseKind::Place && !inventory.can_place(selected)) return UseMiss{};

  const Vec3 eye{pose.x, pose.y + cfg.eye_height, pose.z};
  const Vec3 dir = view_direction(pose.pitch, pose.yaw);
  // 1 = block, 2 = ground plane.
  const auto hit = march(eye, dir, cfg.reach, [&grid](const LatticeCell& c) {
    if (c.y < 0) return 2;
    return solid(grid, c.x, c.y, c.z) ? 1 : 0;
  });
  if (!hit || hit->face == Face::Inside) return UseMiss{};

  if (use == UseKind::Break) {
    if (hit->material != 1) return UseMiss{};
    const CellCoord cell(hit->cell.x, hit->cell.z, hit->cell.y);
    return UseBroken{cell, grid.at(cell)};
  }

  const auto cell = CellCoord::checked(hit->previous.x, hit->previous.z, hit->previous.y);
  if (!cell || grid.at(*cell) != BlockId::Air) return UseMiss{};
  if (body_overlaps_cell(pose.feet(), *cell, cfg)) return UseMiss{};
  return UsePlaced{*cell, selected};
}

}  // namespace gridcraft
