#include "gridcraft/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "gridcraft/errors.hpp"

namespace gridcraft {

namespace {

constexpr std::string_view kMoveNames[] = {"none", "forward", "back", "left", "right"};
constexpr std::string_view kUseNames[] = {"none", "place", "break"};

template <class Enum, std::size_t N>
Enum enum_from(const Json& j, const char* field, const std::string_view (&names)[N]) {
  const auto name = j.get<std::string>();
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  throw ParseError("invalid " + std::string(field) + " '" + name + "'");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

Json camera_to_json(CameraDelta c) { return Json::array({c.pitch, c.yaw}); }

CameraDelta camera_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("camera must be [pitch, yaw]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json hotbar_to_json(const std::optional<BlockId>& h) { return h ? Json(to_int(*h)) : Json(nullptr); }

std::optional<BlockId> hotbar_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  const int v = j.get<int>();
  if (v < 1 || v > kNumColors) throw ParseError("hotbar must be 1..6 or null");
  return static_cast<BlockId>(v);
}

template <class Fn>
auto rethrow_as_parse_error(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json grid_to_json(const VoxelGrid& grid) { return grid.to_flat(); }

VoxelGrid grid_from_json(const Json& j) {
  if (j.is_string()) return grid_from_text(j.get<std::string>());
  if (!j.is_array()) throw ParseError("grid must be a flat integer array or a text literal");
  return rethrow_as_parse_error([&] { return VoxelGrid::from_flat(j.get<std::vector<int>>()); });
}

Json action_to_json(const Action& action) {
  if (const auto* d = std::get_if<DiscreteAction>(&action)) {
    return {{"mode", "discrete"}, {"op", to_string(d->op)}};
  }
  if (const auto* c = std::get_if<ContinuousAction>(&action)) {
    return {{"mode", "continuous"},
            {"shift", c->shift},
            {"camera", camera_to_json(c->camera)},
            {"use", kUseNames[static_cast<std::size_t>(c->use)]},
            {"hotbar", hotbar_to_json(c->hotbar)}};
  }
  const auto& h = std::get<HumanAction>(action);
  return {{"mode", "human"},
          {"move", kMoveNames[static_cast<std::size_t>(h.move)]},
          {"jump", h.jump},
          {"camera", camera_to_json(h.camera)},
          {"use", kUseNames[static_cast<std::size_t>(h.use)]},
          {"hotbar", hotbar_to_json(h.hotbar)}};
}

Action action_from_json(const Json& j) {
  return rethrow_as_parse_error([&]() -> Action {
    const auto mode = control_mode_from_string(require(j, "mode").get<std::string>());
    switch (mode) {
      case ControlMode::Discrete: {
        const auto name = require(j, "op").get<std::string>();
        const auto op = discrete_op_from_string(name);
        if (!op) throw ParseError("unknown discrete op '" + name + "'");
        return DiscreteAction{*op};
      }
      case ControlMode::Continuous: {
        ContinuousAction a;
        if (j.contains("shift")) {
          const auto& s = j["shift"];
          if (!s.is_array() || s.size() != 3) throw ParseError("shift must be [x, y, z]");
          a.shift = {s[0].get<double>(), s[1].get<double>(), s[2].get<double>()};
        }
        if (j.contains("camera")) a.camera = camera_from_json(j["camera"]);
        if (j.contains("use")) a.use = enum_from<UseKind>(j["use"], "use", kUseNames);
        if (j.contains("hotbar")) a.hotbar = hotbar_from_json(j["hotbar"]);
        return a;
      }
      case ControlMode::HumanLevel: {
        HumanAction a;
        if (j.contains("move")) a.move = enum_from<Move>(j["move"], "move", kMoveNames);
        if (j.contains("jump")) a.jump = j["jump"].get<bool>();
        if (j.contains("camera")) a.camera = camera_from_json(j["camera"]);
        if (j.contains("use")) a.use = enum_from<UseKind>(j["use"], "use", kUseNames);
        if (j.contains("hotbar")) a.hotbar = hotbar_from_json(j["hotbar"]);
        return a;
      }
    }
    throw ParseError("unreachable control mode");
  });
}

Json match_to_json(const MatchResult& m) {
  return {{"score", m.score}, {"rotation", m.rotation}, {"offset", {m.offset.dx, m.offset.dz, m.offset.dy}}};
}

MatchResult match_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    MatchResult m;
    m.score = require(j, "score").get<int>();
    m.rotation = require(j, "rotation").get<int>();
    const auto& o = require(j, "offset");
    if (!o.is_array() || o.size() != 3) throw ParseError("offset must be [dx, dz, dy]");
    m.offset = {o[0].get<int>(), o[1].get<int>(), o[2].get<int>()};
    return m;
  });
}

Json task_to_json(const Task& task) {
  Json dialog = Json::array();
  for (const auto& u : task.dialog) {
    Json turn = {{"speaker", to_string(u.speaker)}, {"text", u.text}};
    if (u.timestamp) turn["timestamp"] = *u.timestamp;
    dialog.push_back(std::move(turn));
  }
  Json subgoals = Json::array();
  for (const auto& sg : task.subgoals) {
    Json entry = {{"grid", grid_to_json(sg.grid)}};
    if (sg.utterance) entry["utterance"] = *sg.utterance;
    subgoals.push_back(std::move(entry));
  }
  Json out = {{"id", task.id}, {"dialog", std::move(dialog)}, {"target", grid_to_json(task.target)},
              {"subgoals", std::move(subgoals)}};
  if (!task.initial.empty()) out["initial"] = grid_to_json(task.initial);
  return out;
}

Task task_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    Task task;
    task.id = require(j, "id").get<std::string>();
    if (j.contains("dialog")) {
      for (const auto& turn : j["dialog"]) {
        Utterance u;
        const auto speaker = require(turn, "speaker").get<std::string>();
        if (speaker == "architect") {
          u.speaker = Speaker::Architect;
        } else if (speaker == "builder") {
          u.speaker = Speaker::Builder;
        } else {
          throw ParseError("speaker must be 'architect' or 'builder', got '" + speaker + "'");
        }
        u.text = require(turn, "text").get<std::string>();
        if (turn.contains("timestamp") && !turn["timestamp"].is_null()) u.timestamp = turn["timestamp"].get<std::string>();
        task.dialog.push_back(std::move(u));
      }
    }
    task.target = grid_from_json(require(j, "target"));
    if (j.contains("subgoals")) {
      for (const auto& entry : j["subgoals"]) {
        Subgoal sg;
        sg.grid = grid_from_json(require(entry, "grid"));
        if (entry.contains("utterance") && !entry["utterance"].is_null()) sg.utterance = entry["utterance"].get<int>();
        task.subgoals.push_back(std::move(sg));
      }
    }
    if (j.contains("initial") && !j["initial"].is_null()) task.initial = grid_from_json(j["initial"]);
    return task;
  });
}

std::vector<Task> read_tasks(std::istream& in) {
  std::vector<Task> tasks;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Task task;
    try {
      task = task_from_json(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError(e.what(), number);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
    try {
      validate(task);
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), number);
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

std::vector<Task> load_tasks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open task file " + path.string());
  return read_tasks(in);
}

void write_tasks(std::ostream& out, const std::vector<Task>& tasks) {
  for (const auto& t : tasks) out << task_to_json(t).dump() << '\n';
}

void save_tasks(const std::filesystem::path& path, const std::vector<Task>& tasks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_tasks(out, tasks);
}

std::string base64_encode(const std::uint8_t* data, std::size_t size) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((size + 2) / 3 * 4);
  for (std::size_t i = 0; i < size; i += 3) {
    const std::uint32_t b0 = data[i];
    const std::uint32_t b1 = i + 1 < size ? data[i + 1] : 0;
    const std::uint32_t b2 = i + 2 < size ? data[i + 2] : 0;
    const std::uint32_t triple = (b0 << 16) | (b1 << 8) | b2;
    out.push_back(kAlphabet[(triple >> 18) & 63]);
    out.push_back(kAlphabet[(triple >> 12) & 63]);
    out.push_back(i + 1 < size ? kAlphabet[(triple >> 6) & 63] : '=');
    out.push_back(i + 2 < size ? kAlphabet[triple & 63] : '=');
  }
  return out;
}

Json observation_to_json(const Observation& obs, bool include_pov) {
  Json j = {{"inventory", obs.inventory},
            {"zone", grid_to_json(obs.zone)},
            {"dialog", obs.dialog},
            {"pose", obs.pose}};
  if (include_pov) j["pov"] = base64_encode(obs.pov.data(), obs.pov.size());
  return j;
}

EnvConfig env_config_from_json(const Json& j, EnvConfig base) {
  return rethrow_as_parse_error([&] {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    if (j.contains("horizon")) {
      const int h = j["horizon"].get<int>();
      if (h < 1) throw ParseError("horizon must be >= 1");
      base.horizon = h;
    }
    if (j.contains("inventory")) {
      const auto& inv = j["inventory"];
      if (inv.is_string()) {
        if (inv.get<std::string>() != "unbounded") throw ParseError("inventory string must be 'unbounded'");
        base.inventory = Inventory::unbounded();
      } else if (inv.is_array()) {
        base.inventory = Inventory(inv.get<std::array<int, kNumColors>>());
      } else {
        base.inventory = Inventory::uniform(inv.get<int>());
      }
    }
    if (j.contains("render")) base.render = j["render"].get<bool>();
    if (j.contains("reward")) {
      const auto& r = j["reward"];
      if (r.contains("closer")) base.reward.closer = r["closer"].get<int>();
      if (r.contains("farther")) base.reward.farther = r["farther"].get<int>();
      if (r.contains("misplace")) base.reward.misplace = r["misplace"].get<int>();
      if (r.contains("remove_misplaced")) base.reward.remove_misplaced = r["remove_misplaced"].get<int>();
    }
    if (j.contains("reach")) base.dynamics.reach = j["reach"].get<double>();
    if (j.contains("fov")) base.render_config.fov_degrees = j["fov"].get<double>();
    return base;
  });
}

}  // namespace gridcraft
