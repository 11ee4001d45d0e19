#pragma once

#include <cstdint>
#include <functional>

#include "gridcraft/agents.hpp"
#include "gridcraft/episode_log.hpp"

namespace gridcraft {

/// Called after every step with the 1-based step index.
/// Called after every step with the new step count.
using FrameSink = std::function<void(int step, const Environment& env)>;

/// Plays one episode to termination and records it.
EpisodeRecord run_episode(const EnvConfig& cfg, Agent& agent, const Task& task, ControlMode mode, std::uint64_t seed,
                          int episode, const FrameSink& frames = {});

/// Re-simulates the logged actions and compares every step and the closing record.
/// Throws MismatchError naming the first divergence; step 0 refers to the episode header,
/// steps + 1 to the closing record.
void replay_episode(const EnvConfig& cfg, const EpisodeRecord& record, const Task& task, const FrameSink& frames = {});

}  // namespace gridcraft
