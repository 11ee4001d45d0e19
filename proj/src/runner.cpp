#include "gridcraft/runner.hpp"

#include <string>

#include "gridcraft/errors.hpp"
#include "gridcraft/eval/builder_metrics.hpp"
#include "gridcraft/io.hpp"

namespace gridcraft {

namespace {

StepRecord record_step(const Action& action, const StepResult& r) {
  return {action, r.reward, r.info.event, r.info.match, observation_digest(r.observation)};
}

std::string describe(const StepRecord& s) { return action_to_json(s.action).dump(); }

}  // namespace

EpisodeRecord run_episode(const EnvConfig& cfg, Agent& agent, const Task& task, ControlMode mode, std::uint64_t seed,
                          int episode, const FrameSink& frames) {
  Environment env(cfg);
  Observation obs = env.reset(task, mode, seed);
  agent.begin(env, seed);

  EpisodeRecord record;
  record.episode = episode;
  record.task_id = task.id;
  record.mode = mode;
  record.seed = seed;
  while (!env.done()) {
    const Action action = agent.act(env, obs);
    StepResult r = env.step(action);
    record.steps.push_back(record_step(action, r));
    if (frames) frames(env.steps(), env);
    obs = std::move(r.observation);
  }
  record.final_grid = env.world();
  record.termination = env.termination();
  record.rho = eval::normalized_hamming(env.world(), task.target);
  record.subgoals_completed = env.subgoals().completed();
  return record;
}

void replay_episode(const EnvConfig& cfg, const EpisodeRecord& record, const Task& task, const FrameSink& frames) {
  const int episode = record.episode;
  if (record.task_id != task.id) {
    throw MismatchError("task id '" + record.task_id + "' does not match '" + task.id + "'", episode, 0);
  }
  Environment env(cfg);
  env.reset(task, record.mode, record.seed);

  const int n = static_cast<int>(record.steps.size());
  for (int t = 0; t < n; ++t) {
    const StepRecord& logged = record.steps[static_cast<std::size_t>(t)];
    const std::string where = "step " + std::to_string(t + 1) + " (" + describe(logged) + "): ";
    if (env.done()) throw MismatchError(where + "episode already ended", episode, t + 1);
    StepResult r;
    try {
      r = env.step(logged.action);
    } catch (const ModeMismatch& e) {
      throw MismatchError(where + e.what(), episode, t + 1);
    }
    const StepRecord replayed = record_step(logged.action, r);
    if (replayed.reward != logged.reward) {
      throw MismatchError(where + "reward " + std::to_string(replayed.reward) + " != logged " +
                              std::to_string(logged.reward),
                          episode, t + 1);
    }
    if (replayed.event != logged.event) {
      throw MismatchError(where + "event " + std::string(to_string(replayed.event)) + " != logged " +
                              std::string(to_string(logged.event)),
                          episode, t + 1);
    }
    if (replayed.match != logged.match) {
      throw MismatchError(where + "match " + match_to_json(replayed.match).dump() + " != logged " +
                              match_to_json(logged.match).dump(),
                          episode, t + 1);
    }
    if (replayed.digest != logged.digest) {
      throw MismatchError(where + "observation digest " + replayed.digest + " != logged " + logged.digest, episode,
                          t + 1);
    }
    if (frames) frames(env.steps(), env);
  }

  const std::string where = "end of episode: ";
  if (!env.done()) throw MismatchError(where + "replayed episode is still running", episode, n + 1);
  if (env.termination() != record.termination) {
    throw MismatchError(where + "termination " + std::string(to_string(env.termination())) + " != logged " +
                            std::string(to_string(record.termination)),
                        episode, n + 1);
  }
  if (!(env.world() == record.final_grid)) throw MismatchError(where + "final grid differs", episode, n + 1);
  if (env.subgoals().completed() != record.subgoals_completed) {
    throw MismatchError(where + "completed sub-goal count differs", episode, n + 1);
  }
  if (eval::normalized_hamming(env.world(), task.target) != record.rho) {
    throw MismatchError(where + "rho differs", episode, n + 1);
  }
}

}  // namespace gridcraft
