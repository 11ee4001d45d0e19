#include "gridcraft/episode_log.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>

#include "gridcraft/errors.hpp"
#include "gridcraft/io.hpp"

namespace gridcraft {

int EpisodeRecord::total_return() const {
  return std::accumulate(steps.begin(), steps.end(), 0, [](int acc, const StepRecord& s) { return acc + s.reward; });
}

void write_episode(std::ostream& out, const EpisodeRecord& record) {
  out << Json{{"kind", "episode"},
              {"episode", record.episode},
              {"task_id", record.task_id},
              {"mode", to_string(record.mode)},
              {"seed", record.seed}}
             .dump()
      << '\n';
  int t = 0;
  for (const auto& s : record.steps) {
    out << Json{{"kind", "step"},
                {"episode", record.episode},
                {"t", ++t},
                {"action", action_to_json(s.action)},
                {"reward", s.reward},
                {"event", to_string(s.event)},
                {"match", match_to_json(s.match)},
                {"digest", s.digest}}
               .dump()
        << '\n';
  }
  out << Json{{"kind", "end"},
              {"episode", record.episode},
              {"steps", record.steps.size()},
              {"return", record.total_return()},
              {"termination", to_string(record.termination)},
              {"rho", record.rho},
              {"subgoals_completed", record.subgoals_completed},
              {"final_grid", grid_to_json(record.final_grid)}}
             .dump()
      << '\n';
}

std::vector<EpisodeRecord> read_episodes(std::istream& in) {
  std::vector<EpisodeRecord> out;
  std::optional<EpisodeRecord> open;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = Json::parse(line);
      const auto kind = j.at("kind").get<std::string>();
      const int episode = j.at("episode").get<int>();
      if (kind == "episode") {
        if (open) throw ParseError("episode " + std::to_string(open->episode) + " has no end record");
        EpisodeRecord r;
        r.episode = episode;
        r.task_id = j.at("task_id").get<std::string>();
        r.mode = control_mode_from_string(j.at("mode").get<std::string>());
        r.seed = j.at("seed").get<std::uint64_t>();
        open = std::move(r);
        continue;
      }
      if (!open || open->episode != episode) throw ParseError(kind + " record outside its episode");
      if (kind == "step") {
        const int t = j.at("t").get<int>();
        if (t != static_cast<int>(open->steps.size()) + 1) throw ParseError("step index out of sequence");
        StepRecord s;
        s.action = action_from_json(j.at("action"));
        if (mode_of(s.action) != open->mode) throw ParseError("action mode differs from the episode mode");
        s.reward = j.at("reward").get<int>();
        s.event = structure_event_from_string(j.at("event").get<std::string>());
        s.match = match_from_json(j.at("match"));
        s.digest = j.value("digest", "");
        open->steps.push_back(std::move(s));
      } else if (kind == "end") {
        if (j.at("steps").get<std::size_t>() != open->steps.size()) throw ParseError("step count mismatch");
        open->termination = termination_from_string(j.at("termination").get<std::string>());
        open->rho = j.at("rho").get<double>();
        if (!(open->rho >= 0.0 && open->rho <= 1.0)) throw ParseError("rho outside [0, 1]");
        open->subgoals_completed = j.value("subgoals_completed", 0);
        open->final_grid = grid_from_json(j.at("final_grid"));
        out.push_back(std::move(*open));
        open.reset();
      } else {
        throw ParseError("unknown record kind '" + kind + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    } catch (const Json::exception& e) {
      throw ParseError(e.what(), number);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), number);
    }
  }
  if (open) throw ParseError("episode " + std::to_string(open->episode) + " has no end record", number);
  return out;
}

std::vector<EpisodeRecord> load_episodes(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open episode log " + path.string());
  return read_episodes(in);
}

}  // namespace gridcraft
