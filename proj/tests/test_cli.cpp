#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gridcraft/episode_log.hpp"
#include "gridcraft/fixtures.hpp"
#include "gridcraft/io.hpp"

using namespace gridcraft;
using namespace gridcraft::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / ("gridcraft_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& file) const { return (path_ / file).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_builtin(const std::string& path) { save_tasks(path, {l_shape_task(), eighteen_block_task()}); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);
    CHECK(invoke({"fly"}).code == kExitUsage);
    CHECK(invoke({"run"}).code == kExitUsage);
    const auto r = invoke({"run", "--tasks", "/nonexistent/tasks.jsonl"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("/nonexistent/tasks.jsonl") != std::string::npos);
  }

  TEST_CASE("generate then run then replay") {
    TempDir dir("cli_run");
    auto g = invoke({"generate", "--builtin", "--out", dir / "tasks.jsonl"});
    REQUIRE(g.code == kExitOk);
    CHECK(load_tasks(dir / "tasks.jsonl").size() == 2);

    for (const char* mode : {"discrete", "continuous", "human"}) {
      CAPTURE(mode);
      const auto r = invoke({"run", "--tasks", dir / "tasks.jsonl", "--mode", mode, "--episodes", "2", "--seed", "3",
                          "--out", dir / "episodes.jsonl"});
      REQUIRE(r.code == kExitOk);
      CHECK(r.out.find("2 completed, total return 46") != std::string::npos);
      const auto episodes = load_episodes(dir / "episodes.jsonl");
      REQUIRE(episodes.size() == 2);
      CHECK(episodes[0].task_id == "l-shape-5");
      CHECK(episodes[1].task_id == "tower-18");

      const auto replay = invoke({"replay", dir / "episodes.jsonl", "--tasks", dir / "tasks.jsonl"});
      CHECK(replay.code == kExitOk);
      CHECK(replay.out == "replayed 2 episodes, 0 divergences\n");

      const auto eval = invoke({"eval", dir / "episodes.jsonl"});
      REQUIRE(eval.code == kExitOk);
      const Json report = Json::parse(eval.out);
      CHECK(report["S_r"] == 23.0);
      CHECK(report["S_s"] == 1.0);
      CHECK(report["S_c"] == 1.0);
      CHECK(report["N"] == 2);
    }
  }

  TEST_CASE("runs are reproducible across worker counts") {
    TempDir dir("cli_jobs");
    write_builtin(dir / "tasks.jsonl");
    const std::vector<std::string> base = {"run", "--tasks", dir / "tasks.jsonl", "--agent", "random", "--mode",
                                           "human", "--episodes", "4", "--seed", "11"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1", "--out", dir / "a.jsonl"});
    auto four = base;
    four.insert(four.end(), {"--jobs", "4", "--out", dir / "b.jsonl"});
    REQUIRE(invoke(one).code == kExitOk);
    REQUIRE(invoke(four).code == kExitOk);
    CHECK(slurp(dir / "a.jsonl") == slurp(dir / "b.jsonl"));
    CHECK(invoke({"replay", dir / "a.jsonl", "--tasks", dir / "tasks.jsonl"}).code == kExitOk);
  }

  TEST_CASE("tampered logs report the divergent step") {
    TempDir dir("cli_tamper");
    write_builtin(dir / "tasks.jsonl");
    REQUIRE(invoke({"run", "--tasks", dir / "tasks.jsonl", "--out", dir / "episodes.jsonl"}).code == kExitOk);
    auto episodes = load_episodes(dir / "episodes.jsonl");
    REQUIRE(episodes.size() == 1);

    std::size_t t = 0;
    while (episodes[0].steps[t].reward == 0) ++t;
    episodes[0].steps[t].reward = -2;
    {
      std::ofstream out(dir / "tampered.jsonl");
      write_episode(out, episodes[0]);
    }
    const auto r = invoke({"replay", dir / "tampered.jsonl", "--tasks", dir / "tasks.jsonl"});
    CHECK(r.code == kExitMismatch);
    CHECK(r.err.find("divergence in episode 0 at step " + std::to_string(t + 1)) != std::string::npos);

    auto tasks = load_tasks(dir / "tasks.jsonl");
    tasks[0].id = "renamed";
    save_tasks(dir / "other.jsonl", tasks);
    CHECK(invoke({"replay", dir / "episodes.jsonl", "--tasks", dir / "other.jsonl"}).code != kExitOk);
  }

  TEST_CASE("frames are written per step and replay identically") {
    TempDir dir("cli_frames");
    save_tasks(dir / "tasks.jsonl", {l_shape_task()});
    fs::create_directories(dir / "run");
    fs::create_directories(dir / "replay");
    REQUIRE(invoke({"run", "--tasks", dir / "tasks.jsonl", "--mode", "continuous", "--out", dir / "episodes.jsonl",
                 "--frames-dir", dir / "run"})
                .code == kExitOk);
    const auto episodes = load_episodes(dir / "episodes.jsonl");
    std::size_t frames = 0;
    for (const auto& entry : fs::directory_iterator(dir / "run")) {
      ++frames;
      CHECK(entry.path().extension() == ".ppm");
    }
    CHECK(frames == episodes[0].steps.size());
    REQUIRE(invoke({"replay", dir / "episodes.jsonl", "--tasks", dir / "tasks.jsonl", "--frames-dir", dir / "replay"})
                .code == kExitOk);
    for (const auto& entry : fs::directory_iterator(dir / "run")) {
      CHECK(slurp(entry.path().string()) == slurp(dir / ("replay/" + entry.path().filename().string())));
    }
  }

  TEST_CASE("a ten step episode dumps ten frames") {
    TempDir dir("cli_ten");
    save_tasks(dir / "tasks.jsonl", {l_shape_task()});
    {
      std::ofstream cfg(dir / "config.json");
      cfg << R"({"horizon": 10})";
    }
    fs::create_directories(dir / "frames");
    REQUIRE(invoke({"run", "--tasks", dir / "tasks.jsonl", "--agent", "random", "--config", dir / "config.json",
                    "--out", dir / "episodes.jsonl", "--frames-dir", dir / "frames"})
                .code == kExitOk);
    REQUIRE(load_episodes(dir / "episodes.jsonl")[0].steps.size() == 10);
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir / "frames")) names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    REQUIRE(names.size() == 10);
    CHECK(names.front() == "ep0000_t00001.ppm");
    CHECK(names.back() == "ep0000_t00010.ppm");
    CHECK(slurp(dir / "frames/ep0000_t00001.ppm").rfind("P6\n64 64\n255\n", 0) == 0);
  }

  TEST_CASE("config file sets the environment") {
    TempDir dir("cli_config");
    save_tasks(dir / "tasks.jsonl", {eighteen_block_task()});
    {
      std::ofstream cfg(dir / "config.json");
      cfg << R"({"horizon": 7, "render": false, "agent": "random"})";
    }
    const auto r = invoke({"run", "--tasks", dir / "tasks.jsonl", "--config", dir / "config.json", "--out",
                        dir / "episodes.jsonl"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("random") != std::string::npos);
    const auto episodes = load_episodes(dir / "episodes.jsonl");
    CHECK(episodes[0].steps.size() <= 7);
    CHECK(invoke({"replay", dir / "episodes.jsonl", "--tasks", dir / "tasks.jsonl", "--config", dir / "config.json"})
              .code == kExitOk);
  }

  TEST_CASE("architect evaluation") {
    TempDir dir("cli_architect");
    {
      std::ofstream tsv(dir / "pairs.tsv");
      tsv << "context_id\tcandidate\treference\n";
      tsv << "g1\tplace a blue block\tplace a red block\n";
    }
    const auto r = invoke({"eval", dir / "pairs.tsv"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["bleu"]["1"] == 0.75);
    CHECK(j["keywords"]["colors"]["recall"] == 0.0);

    REQUIRE(invoke({"eval-architect", dir / "pairs.tsv", "--out", dir / "report.json", "--sentence-level"}).code ==
            kExitOk);
    CHECK(Json::parse(slurp(dir / "report.json"))["pairs"] == 1);

    {
      std::ofstream tsv(dir / "broken.tsv");
      tsv << "g1\tmissing a column\n";
    }
    const auto bad = invoke({"eval-architect", dir / "broken.tsv"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("line 1") != std::string::npos);
  }

  TEST_CASE("external agents") {
    TempDir dir("cli_external");
    save_tasks(dir / "tasks.jsonl", {l_shape_task()});
    {
      std::ofstream cfg(dir / "config.json");
      cfg << R"({"horizon": 5})";
    }
    for (const char* mode : {"discrete", "continuous", "human"}) {
      CAPTURE(mode);
      const auto r = invoke({"run", "--tasks", dir / "tasks.jsonl", "--mode", mode, "--agent", "external",
                          "--agent-cmd", HELPER_AGENT, "--config", dir / "config.json", "--out",
                          dir / "episodes.jsonl"});
      REQUIRE(r.code == kExitOk);
      const auto episodes = load_episodes(dir / "episodes.jsonl");
      CHECK(episodes[0].steps.size() == 5);
      CHECK(episodes[0].termination == Termination::StepLimit);
      CHECK(episodes[0].total_return() == 0);
    }
    for (const char* behavior : {"bad", "quit", "wrong"}) {
      CAPTURE(behavior);
      const auto r = invoke({"run", "--tasks", dir / "tasks.jsonl", "--agent", "external", "--agent-cmd",
                          std::string(HELPER_AGENT) + " " + behavior, "--out", dir / "episodes.jsonl"});
      CHECK(r.code == kExitUsage);
      CHECK(r.err.find("external agent") != std::string::npos);
    }
    CHECK(invoke({"run", "--tasks", dir / "tasks.jsonl", "--agent", "external"}).code == kExitUsage);
  }
}
