#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridcraft/dynamics.hpp"
#include "gridcraft/environment.hpp"
#include "gridcraft/matcher.hpp"
#include "gridcraft/task.hpp"
#include "gridcraft/voxel_grid.hpp"

// JSON shapes shared by tasks.jsonl, episodes.jsonl, the external agent protocol and config files.
// Every parser throws ParseError for malformed input.
namespace gridcraft {

using Json = nlohmann::json;

/// Grids are written as flat (x, z, y) row-major arrays of 1089 ids; the text literal
/// is accepted on input too.
Json grid_to_json(const VoxelGrid& grid);
VoxelGrid grid_from_json(const Json& j);

/// {"mode": "discrete", "op": "step_north"}
/// {"mode": "continuous", "shift": [x, y, z], "camera": [pitch, yaw], "use": "place", "hotbar": 1}
/// {"mode": "human", "move": "forward", "jump": false, "camera": [pitch, yaw], "use": "none", "hotbar": null}
/// Missing optional fields take their neutral values.
Json action_to_json(const Action& action);
Action action_from_json(const Json& j);

Json match_to_json(const MatchResult& m);
MatchResult match_from_json(const Json& j);

Json task_to_json(const Task& task);
Task task_from_json(const Json& j);

/// One task per line; blank lines are skipped. Each task is validated, and failures
/// carry the 1-based line number.
std::vector<Task> read_tasks(std::istream& in);
std::vector<Task> load_tasks(const std::filesystem::path& path);
void write_tasks(std::ostream& out, const std::vector<Task>& tasks);
void save_tasks(const std::filesystem::path& path, const std::vector<Task>& tasks);

/// Observation message used by the external agent protocol. The POV is base64 of the raw
/// RGB bytes and is omitted when `include_pov` is false.
Json observation_to_json(const Observation& obs, bool include_pov);

std::string base64_encode(const std::uint8_t* data, std::size_t size);

/// Applies the keys present in `j` on top of `base`:
/// {"horizon": 500, "inventory": 20 | "unbounded" | [6 counts], "render": true,
///  "reward": {"closer": 2, "farther": -2, "misplace": -1, "remove_misplaced": 1},
///  "reach": 5.0, "fov": 70.0}
EnvConfig env_config_from_json(const Json& j, EnvConfig base = {});

}  // namespace gridcraft
