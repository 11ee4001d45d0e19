#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "external_agent.hpp"
#include "gridcraft/eval/builder_metrics.hpp"
#include "gridcraft/eval/text_metrics.hpp"
#include "gridcraft/fixtures.hpp"
#include "gridcraft/io.hpp"
#include "gridcraft/rng.hpp"
#include "gridcraft/runner.hpp"

namespace gridcraft::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

Json load_config(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("GRIDCRAFT_CONFIG")) path = env;
  }
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw ParseError("config file " + path + " must hold a JSON object");
    return j;
  } catch (const Json::exception& e) {
    throw ParseError("config file " + path + ": " + e.what());
  }
}

// Fills an option from the config file unless it was given on the command line.
template <typename T>
void config_default(const Json& config, const char* key, const CLI::Option* opt, T& value) {
  if (opt->count() > 0 || !config.contains(key)) return;
  try {
    value = config.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config key '") + key + "': " + e.what());
  }
}

std::string frame_name(int episode, int step) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "ep%04d_t%05d.ppm", episode, step);
  return buf;
}

FrameSink frame_writer(const std::string& dir, int episode, const RenderConfig& render) {
  if (dir.empty()) return {};
  return [dir, episode, render](int step, const Environment& env) {
    write_ppm(fs::path(dir) / frame_name(episode, step), render_pov(env.world(), env.kinematics().pose, render));
  };
}

struct Output {
  std::ofstream file;
  std::ostream* stream;

  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path + " for writing");
    stream = &file;
  }
};

struct RunOptions {
  std::string tasks;
  std::string mode = "discrete";
  std::string agent = "scripted_optimal";
  std::string agent_cmd;
  int episodes = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string frames_dir;
  std::string config;
  int jobs = 1;
};

int cmd_run(const RunOptions& o, const EnvConfig& env_cfg, std::ostream& out, std::ostream& err) {
  const auto tasks = load_tasks(o.tasks);
  if (tasks.empty()) throw UsageError("task file " + o.tasks + " holds no tasks");
  const ControlMode mode = control_mode_from_string(o.mode);
  if (o.episodes < 1) throw UsageError("--episodes must be at least 1");
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");

  std::function<std::unique_ptr<Agent>()> make;
  if (o.agent == "external") {
    if (o.agent_cmd.empty()) throw UsageError("--agent external needs --agent-cmd");
    make = [cmd = o.agent_cmd] { return std::make_unique<ExternalAgent>(cmd); };
  } else if (make_agent(o.agent)) {
    make = [name = o.agent] { return make_agent(name); };
  } else {
    throw UsageError("unknown agent '" + o.agent + "' (valid agents: random, scripted_optimal, external)");
  }
  if (!o.frames_dir.empty()) fs::create_directories(o.frames_dir);

  std::vector<EpisodeRecord> records(static_cast<std::size_t>(o.episodes));
  std::vector<std::exception_ptr> errors(records.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    std::unique_ptr<Agent> agent;
    for (int i = next++; i < o.episodes; i = next++) {
      try {
        if (!agent) agent = make();
        const Task& task = tasks[static_cast<std::size_t>(i) % tasks.size()];
        const std::uint64_t seed = mix_seed(o.seed, static_cast<std::uint64_t>(i));
        records[static_cast<std::size_t>(i)] =
            run_episode(env_cfg, *agent, task, mode, seed, i, frame_writer(o.frames_dir, i, env_cfg.render_config));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int threads = std::min(o.jobs, o.episodes);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Output sink(o.out, out);
  for (const auto& r : records) write_episode(*sink.stream, r);
  sink.stream->flush();

  int completed = 0;
  long total = 0;
  for (const auto& r : records) {
    completed += r.success() ? 1 : 0;
    total += r.total_return();
  }
  std::ostream& report = o.out.empty() ? err : out;
  report << "ran " << records.size() << " episodes (" << o.mode << ", " << o.agent << "): " << completed
         << " completed, total return " << total << "\n";
  return kExitOk;
}

int cmd_replay(const std::string& log, const std::string& tasks_path, const std::string& frames_dir,
               const EnvConfig& env_cfg, std::ostream& out, std::ostream& err) {
  const auto records = load_episodes(log);
  std::map<std::string, Task> tasks;
  for (auto& t : load_tasks(tasks_path)) {
    const std::string id = t.id;
    tasks.emplace(id, std::move(t));
  }
  if (!frames_dir.empty()) fs::create_directories(frames_dir);
  for (const auto& r : records) {
    const auto it = tasks.find(r.task_id);
    if (it == tasks.end()) throw UsageError("episode " + std::to_string(r.episode) + " uses unknown task '" + r.task_id + "'");
    try {
      replay_episode(env_cfg, r, it->second, frame_writer(frames_dir, r.episode, env_cfg.render_config));
    } catch (const MismatchError& e) {
      err << "divergence in episode " << e.episode() << " at step " << e.step() << ": " << e.what() << "\n";
      return kExitMismatch;
    }
  }
  out << "replayed " << records.size() << " episodes, 0 divergences\n";
  return kExitOk;
}

int cmd_eval_builder(const std::string& log, const std::string& out_path, std::ostream& out) {
  const auto scores = eval::score_episodes(load_episodes(log));
  Output sink(out_path, out);
  *sink.stream << eval::to_json(scores).dump(2) << "\n";
  return kExitOk;
}

int cmd_eval_architect(const std::string& tsv, const std::string& lexicon_path, bool sentence_level,
                       const std::string& out_path, std::ostream& out) {
  std::ifstream in(tsv);
  if (!in) throw ParseError("cannot open architect file " + tsv);
  const auto rows = eval::read_architect_tsv(in);
  const auto lexicon = lexicon_path.empty() ? eval::KeywordLexicon::defaults() : eval::KeywordLexicon::load(lexicon_path);
  const auto scores = eval::score_architect(rows, lexicon, sentence_level);
  Output sink(out_path, out);
  *sink.stream << eval::to_json(scores).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voxel building environment and evaluation harness", "gridcraft"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Play episodes with an agent and write episodes.jsonl");
  run_cmd->add_option("--tasks", run.tasks, "Task file (JSON lines)")->required();
  auto* mode_opt = run_cmd->add_option("--mode", run.mode, "human | discrete | continuous");
  auto* agent_opt = run_cmd->add_option("--agent", run.agent, "random | scripted_optimal | external");
  auto* agent_cmd_opt = run_cmd->add_option("--agent-cmd", run.agent_cmd, "Shell command of an external agent");
  auto* episodes_opt = run_cmd->add_option("--episodes", run.episodes, "Number of episodes");
  auto* seed_opt = run_cmd->add_option("--seed", run.seed, "Base seed");
  run_cmd->add_option("--out", run.out, "Episode log path (default: standard output)");
  run_cmd->add_option("--frames-dir", run.frames_dir, "Write a PPM frame per step into this directory");
  run_cmd->add_option("--config", run.config, "JSON config file (default: $GRIDCRAFT_CONFIG)");
  auto* jobs_opt = run_cmd->add_option("--jobs", run.jobs, "Parallel workers");

  std::string replay_log;
  std::string replay_tasks;
  std::string replay_frames;
  std::string replay_config;
  auto* replay_cmd = app.add_subcommand("replay", "Re-simulate an episode log and report the first divergence");
  replay_cmd->add_option("log", replay_log, "episodes.jsonl")->required();
  replay_cmd->add_option("--tasks", replay_tasks, "Task file used for the run")->required();
  replay_cmd->add_option("--frames-dir", replay_frames, "Write a PPM frame per step into this directory");
  replay_cmd->add_option("--config", replay_config, "JSON config file (default: $GRIDCRAFT_CONFIG)");

  std::string eval_input;
  std::string eval_out;
  std::string lexicon;
  bool sentence_level = false;
  auto add_eval = [&](const char* name, const char* help, bool builder, bool architect) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", eval_input, builder && architect ? "episodes.jsonl or architect .tsv"
                                         : builder            ? "episodes.jsonl"
                                                              : "architect .tsv")
        ->required();
    cmd->add_option("--out", eval_out, "Report path (default: standard output)");
    if (architect) {
      cmd->add_option("--lexicon", lexicon, "Keyword lexicon JSON (default: built-in)");
      cmd->add_flag("--sentence-level", sentence_level, "Average sentence BLEU instead of corpus BLEU");
    }
    return cmd;
  };
  auto* eval_cmd = add_eval("eval", "Score an episode log, or an architect .tsv", true, true);
  auto* eval_builder_cmd = add_eval("eval-builder", "Score an episode log: S_r, S_s, S_c, N", true, false);
  auto* eval_architect_cmd = add_eval("eval-architect", "Score architect utterances: BLEU-1..4, keyword P/R", false, true);

  std::uint64_t gen_seed = 0;
  int gen_count = 10;
  int gen_min = 3;
  int gen_max = 12;
  bool gen_builtin = false;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Write synthetic build tasks as JSON lines");
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--count", gen_count, "Number of tasks");
  gen_cmd->add_option("--min-size", gen_min, "Fewest blocks per task");
  gen_cmd->add_option("--max-size", gen_max, "Most blocks per task");
  gen_cmd->add_flag("--builtin", gen_builtin, "Write the l-shape-5 and tower-18 fixtures instead");
  gen_cmd->add_option("--out", gen_out, "Task file path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kExitOk;
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      const Json config = load_config(run.config);
      config_default(config, "mode", mode_opt, run.mode);
      config_default(config, "agent", agent_opt, run.agent);
      config_default(config, "agent_cmd", agent_cmd_opt, run.agent_cmd);
      config_default(config, "episodes", episodes_opt, run.episodes);
      config_default(config, "seed", seed_opt, run.seed);
      config_default(config, "jobs", jobs_opt, run.jobs);
      return cmd_run(run, env_config_from_json(config), out, err);
    }
    if (replay_cmd->parsed()) {
      return cmd_replay(replay_log, replay_tasks, replay_frames, env_config_from_json(load_config(replay_config)), out,
                        err);
    }
    if (eval_builder_cmd->parsed()) return cmd_eval_builder(eval_input, eval_out, out);
    if (eval_architect_cmd->parsed()) return cmd_eval_architect(eval_input, lexicon, sentence_level, eval_out, out);
    if (eval_cmd->parsed()) {
      if (fs::path(eval_input).extension() == ".tsv") {
        return cmd_eval_architect(eval_input, lexicon, sentence_level, eval_out, out);
      }
      return cmd_eval_builder(eval_input, eval_out, out);
    }
    if (gen_cmd->parsed()) {
      const auto tasks = gen_builtin ? std::vector<Task>{l_shape_task(), eighteen_block_task()}
                                     : generate_fixtures(gen_seed, gen_count, gen_min, gen_max);
      Output sink(gen_out, out);
      write_tasks(*sink.stream, tasks);
      if (!gen_out.empty()) out << "wrote " << tasks.size() << " tasks to " << gen_out << "\n";
      return kExitOk;
    }
  } catch (const MismatchError& e) {
    err << "divergence in episode " << e.episode() << " at step " << e.step() << ": " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gridcraft::cli
