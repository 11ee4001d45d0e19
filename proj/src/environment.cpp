#include "gridcraft/environment.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

#include "gridcraft/errors.hpp"

namespace gridcraft {

namespace {

class Fnv1a {
 public:
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      const auto b = static_cast<unsigned char>(v >> (8 * i));
      bytes(&b, 1);
    }
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

int default_horizon(ControlMode mode) {
  switch (mode) {
    case ControlMode::HumanLevel: return 5000;
    case ControlMode::Discrete: return 500;
    case ControlMode::Continuous: return 2000;
  }
  return 500;
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Running: return "running";
    case Termination::OutOfZone: return "out_of_zone";
    case Termination::StepLimit: return "step_limit";
    case Termination::Completed: return "completed";
  }
  return "running";
}

Termination termination_from_string(std::string_view name) {
  if (name == "running") return Termination::Running;
  if (name == "out_of_zone") return Termination::OutOfZone;
  if (name == "step_limit") return Termination::StepLimit;
  if (name == "completed") return Termination::Completed;
  throw ParseError("unknown termination reason '" + std::string(name) + "'");
}

std::string observation_digest(const Observation& obs) {
  Fnv1a h;
  h.bytes(obs.pov.data(), obs.pov.size());
  for (const int c : obs.inventory) h.u64(static_cast<std::uint64_t>(static_cast<std::int64_t>(c)));
  h.bytes(obs.zone.raw().data(), kCellCount);
  h.u64(obs.dialog.size());
  h.bytes(obs.dialog.data(), obs.dialog.size());
  for (const double v : obs.pose) h.u64(std::bit_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.value()));
  return buf;
}

bool outside_zone(const AgentPose& pose) {
  return pose.x < 0.0 || pose.x > kZoneX || pose.z < 0.0 || pose.z > kZoneZ || pose.y < 0.0 || pose.y > kZoneY;
}

Environment::Environment(EnvConfig cfg) : cfg_(std::move(cfg)) {}

Observation Environment::reset(const Task& task, ControlMode mode, std::uint64_t seed) {
  const int size = task.target.nonair();
  if (size == 0) throw InvalidTask("task '" + task.id + "' has an empty target");
  Kinematics spawn;
  if (body_collides(spawn.pose.feet(), task.initial, cfg_.dynamics)) {
    throw InvalidTask("task '" + task.id + "': initial world blocks the spawn point");
  }

  task_ = task;
  target_size_ = size;
  mode_ = mode;
  seed_ = seed;
  horizon_ = cfg_.horizon.value_or(default_horizon(mode));
  started_ = true;
  steps_ = 0;
  termination_ = Termination::Running;
  world_ = task.initial;
  kinematics_ = spawn;
  inventory_ = cfg_.inventory;
  selected_ = BlockId::Blue;
  match_ = max_intersection(world_, task_.target);
  subgoals_ = SubgoalQueue::for_task(task_);
  subgoals_.advance(world_);
  dialog_ = dialog_text(task_);
  return observe();
}

bool Environment::completed() const { return match_.score == target_size_ && world_.nonair() == target_size_; }

StepResult Environment::step(const Action& action) {
  if (!started_) throw std::logic_error("step() called before reset()");
  if (done()) throw EpisodeFinished("episode already finished (" + std::string(to_string(termination_)) + ")");
  if (mode_of(action) != mode_) {
    throw ModeMismatch("episode runs in " + std::string(to_string(mode_)) + " mode, got a " +
                       std::string(to_string(mode_of(action))) + " action");
  }

  if (const auto pick = selection_of(action); pick && *pick != BlockId::Air) selected_ = *pick;
  kinematics_ = apply_motion(kinematics_, world_, action, mode_, cfg_.dynamics);
  ++steps_;

  StepResult result;
  StructureEvent event = StructureEvent::None;
  if (outside_zone(kinematics_.pose)) {
    termination_ = Termination::OutOfZone;
  } else {
    const auto outcome = resolve_use(kinematics_.pose, world_, use_of(action), selected_, inventory_, cfg_.dynamics);
    if (const auto* placed = std::get_if<UsePlaced>(&outcome)) {
      world_.set(placed->cell, placed->id);
      inventory_.take(placed->id);
      event = StructureEvent::Placed;
    } else if (const auto* broken = std::get_if<UseBroken>(&outcome)) {
      world_.set(broken->cell, BlockId::Air);
      inventory_.give(broken->id);
      event = StructureEvent::Broken;
    }
    if (event != StructureEvent::None) {
      const MatchResult next = max_intersection(world_, task_.target);
      result.reward = step_reward(match_, next, event, cfg_.reward);
      match_ = next;
      subgoals_.advance(world_);
    }
    if (completed()) {
      termination_ = Termination::Completed;
    } else if (steps_ >= horizon_) {
      termination_ = Termination::StepLimit;
    }
  }

  result.observation = observe();
  result.done = done();
  result.info = {match_, steps_, termination_, event, subgoals_.completed()};
  return result;
}

Observation Environment::observe() const {
  Observation obs;
  if (cfg_.render) obs.pov = render_pov(world_, kinematics_.pose, cfg_.render_config);
  obs.inventory = inventory_.counts();
  obs.zone = world_;
  obs.dialog = dialog_;
  const AgentPose& p = kinematics_.pose;
  obs.pose = {p.x, p.y, p.z, p.pitch, p.yaw};
  return obs;
}

}  // namespace gridcraft
