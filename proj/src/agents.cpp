#include "gridcraft/agents.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <optional>

#include "gridcraft/fixtures.hpp"
#include "gridcraft/rng.hpp"

namespace gridcraft {

namespace {

constexpr double kLookDown = 90.0;

BlockId random_color(Rng& rng) { return static_cast<BlockId>(rng.between(1, kNumColors)); }

UseKind random_use(Rng& rng) {
  const double u = rng.unit();
  if (u < 0.1) return UseKind::Place;
  if (u < 0.15) return UseKind::Break;
  return UseKind::None;
}

class RandomAgent final : public Agent {
 public:
  void begin(const Environment&, std::uint64_t seed) override { rng_ = Rng(mix_seed(seed, 0x7a6e)); }

  Action act(const Environment& env, const Observation&) override {
    switch (env.mode()) {
      case ControlMode::Discrete:
        return DiscreteAction{static_cast<DiscreteOp>(rng_.below(kDiscreteOpCount))};
      case ControlMode::HumanLevel: {
        HumanAction a;
        a.move = static_cast<Move>(rng_.below(5));
        a.jump = rng_.chance(0.1);
        a.camera = {rng_.uniform(-15.0, 15.0), rng_.uniform(-15.0, 15.0)};
        a.use = random_use(rng_);
        if (rng_.chance(0.1)) a.hotbar = random_color(rng_);
        return a;
      }
      case ControlMode::Continuous: {
        ContinuousAction a;
        for (double& s : a.shift) s = rng_.uniform(-0.25, 0.25);
        a.camera = {rng_.uniform(-15.0, 15.0), rng_.uniform(-15.0, 15.0)};
        a.use = random_use(rng_);
        if (rng_.chance(0.1)) a.hotbar = random_color(rng_);
        return a;
      }
    }
    return noop_action(env.mode());
  }

 private:
  Rng rng_{0};
};

bool solid(const VoxelGrid& grid, int x, int y, int z) {
  const auto cell = CellCoord::checked(x, z, y);
  return cell && grid.at(*cell) != BlockId::Air;
}

int column_height(const VoxelGrid& grid, int x, int z) {
  for (int y = kZoneY - 1; y >= 0; --y) {
    if (solid(grid, x, y, z)) return y + 1;
  }
  return 0;
}

std::optional<PlacedBlock> next_missing(const Environment& env) {
  for (const auto& b : build_order(env.task().target)) {
    if (env.world().at(b.cell) != b.id) return b;
  }
  return std::nullopt;
}

double toward(double from, double to) { return std::clamp(to - from, -1.0, 1.0); }

Action continuous_step(const Environment& env) {
  const auto next = next_missing(env);
  if (!next) return ContinuousAction{};
  const AgentPose& pose = env.kinematics().pose;
  ContinuousAction a;
  a.camera.pitch = std::clamp(kLookDown - pose.pitch, -15.0, 15.0);

  const double tx = next->cell.x() + 0.5;
  const double ty = next->cell.y() + 1.0;
  const double tz = next->cell.z() + 0.5;
  if (pose.y < ty) {
    a.shift[1] = toward(pose.y, ty);
  } else if (pose.x != tx || pose.z != tz) {
    a.shift[0] = toward(pose.x, tx);
    a.shift[2] = toward(pose.z, tz);
  } else if (pose.y > ty) {
    a.shift[1] = toward(pose.y, ty);
  } else if (pose.pitch == kLookDown) {
    a.use = UseKind::Place;
    a.hotbar = next->id;
  }
  return a;
}

Action discrete_step(const Environment& env) {
  const auto next = next_missing(env);
  if (!next) return DiscreteAction{DiscreteOp::Noop};
  const AgentPose& pose = env.kinematics().pose;
  if (pose.pitch < kLookDown) return DiscreteAction{DiscreteOp::LookDown};
  if (env.selected() != next->id) return DiscreteAction{select_op(next->id)};

  const int cx = static_cast<int>(std::floor(pose.x));
  const int cz = static_cast<int>(std::floor(pose.z));
  if (cx != next->cell.x() || cz != next->cell.z()) {
    int nx = cx;
    int nz = cz;
    DiscreteOp op;
    if (cx != next->cell.x()) {
      op = cx < next->cell.x() ? DiscreteOp::StepEast : DiscreteOp::StepWest;
      nx += cx < next->cell.x() ? 1 : -1;
    } else {
      op = cz < next->cell.z() ? DiscreteOp::StepSouth : DiscreteOp::StepNorth;
      nz += cz < next->cell.z() ? 1 : -1;
    }
    if (column_height(env.world(), nx, nz) > pose.y + 1.0) return DiscreteAction{DiscreteOp::Jump};
    return DiscreteAction{op};
  }
  if (pose.y < next->cell.y() + 1.0) return DiscreteAction{DiscreteOp::Jump};
  return DiscreteAction{DiscreteOp::Place};
}

// Human-level: walk the column tops (climbing at most one block per step), then pillar-jump
// on a column until it reaches its target height.
class HumanBuilder {
 public:
  void reset() { waypoint_.reset(); }

  Action act(const Environment& env) {
    const Kinematics& k = env.kinematics();
    const AgentPose& pose = k.pose;
    HumanAction a;
    if (pose.pitch < kLookDown) {
      a.camera.pitch = std::min(15.0, kLookDown - pose.pitch);
      return a;
    }
    const VoxelGrid& world = env.world();
    const VoxelGrid& target = env.task().target;
    const bool grounded = k.vertical_velocity == 0.0 && on_support(pose, world, env.config().dynamics);

    if (waypoint_) {
      const double wx = waypoint_->first + 0.5;
      const double wz = waypoint_->second + 0.5;
      if (pose.x != wx || pose.z != wz) {
        // Yaw stays 0: forward is +z, left is +x.
        if (pose.x != wx) {
          a.move = pose.x < wx ? Move::Left : Move::Right;
        } else {
          a.move = pose.z < wz ? Move::Forward : Move::Back;
        }
        a.jump = grounded && column_height(world, waypoint_->first, waypoint_->second) > pose.y;
        return a;
      }
      if (!grounded) return a;
      waypoint_.reset();
    }

    const int cx = static_cast<int>(std::floor(pose.x));
    const int cz = static_cast<int>(std::floor(pose.z));
    const int built = column_height(world, cx, cz);
    if (built < column_height(target, cx, cz)) {
      const BlockId color = target.at(CellCoord(cx, cz, built));
      if (!grounded) {
        if (pose.y >= built + 1.0) {
          a.use = UseKind::Place;
          a.hotbar = color;
        }
        return a;
      }
      a.jump = true;
      a.hotbar = color;
      return a;
    }
    if (!grounded) return a;

    const auto step = first_step(world, target, cx, cz);
    if (!step) return a;
    waypoint_ = step;
    return act(env);
  }

 private:
  static bool on_support(const AgentPose& pose, const VoxelGrid& world, const DynamicsConfig& cfg) {
    if (pose.y == 0.0) return true;
    if (pose.y != std::floor(pose.y)) return false;
    const double hw = cfg.body_width / 2.0;
    const int below = static_cast<int>(pose.y) - 1;
    for (const double x : {pose.x - hw, pose.x + hw}) {
      for (const double z : {pose.z - hw, pose.z + hw}) {
        if (solid(world, static_cast<int>(std::floor(x)), below, static_cast<int>(std::floor(z)))) return true;
      }
    }
    return false;
  }

  // Breadth-first over column tops; a move may climb one block or drop any height.
  static std::optional<std::pair<int, int>> first_step(const VoxelGrid& world, const VoxelGrid& target, int sx,
                                                       int sz) {
    constexpr int kDirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::array<int, kZoneX * kZoneZ> parent;
    parent.fill(-1);
    const int start = sx * kZoneZ + sz;
    parent[start] = start;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      const int x = node / kZoneZ;
      const int z = node % kZoneZ;
      if (node != start && column_height(world, x, z) < column_height(target, x, z)) {
        int n = node;
        while (parent[n] != start) n = parent[n];
        return std::pair{n / kZoneZ, n % kZoneZ};
      }
      const int h = column_height(world, x, z);
      for (const auto& d : kDirs) {
        const int nx = x + d[0];
        const int nz = z + d[1];
        if (nx < 0 || nx >= kZoneX || nz < 0 || nz >= kZoneZ) continue;
        const int next = nx * kZoneZ + nz;
        if (parent[next] != -1 || column_height(world, nx, nz) > h + 1) continue;
        parent[next] = node;
        queue.push_back(next);
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<int, int>> waypoint_;
};

class ScriptedAgent final : public Agent {
 public:
  void begin(const Environment&, std::uint64_t) override { human_.reset(); }

  Action act(const Environment& env, const Observation&) override {
    switch (env.mode()) {
      case ControlMode::Continuous: return continuous_step(env);
      case ControlMode::Discrete: return discrete_step(env);
      case ControlMode::HumanLevel: return human_.act(env);
    }
    return noop_action(env.mode());
  }

 private:
  HumanBuilder human_;
};

}  // namespace

std::unique_ptr<Agent> make_random_agent() { return std::make_unique<RandomAgent>(); }

std::unique_ptr<Agent> make_scripted_agent() { return std::make_unique<ScriptedAgent>(); }

std::unique_ptr<Agent> make_agent(std::string_view name) {
  if (name == "random") return make_random_agent();
  if (name == "scripted_optimal") return make_scripted_agent();
  return nullptr;
}

}  // namespace gridcraft
