#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridcraft/task.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

/// One observation row of a recorded human-human game.
struct GameRow {
  std::string timestamp;           ///< ISO-8601
  std::vector<std::string> chat;   ///< history so far, "<Architect> ..." / "<Builder> ..."
  std::array<double, 5> pose{};    ///< builder x, y, z, pitch, yaw
  std::array<int, kNumColors> inventory{};
  VoxelGrid blocks;
};

struct GameRecord {
  std::vector<GameRow> rows;
};

/// JSON lines, one row each:
///   {"timestamp": "2021-07-01T10:00:00Z", "chat": ["<Architect> ..."], "pose": [x, y, z, pitch, yaw],
///    "inventory": [6 counts], "blocks": [[x, y, z, id], ...]}
/// Block coordinates are zone-local with y up. Rows must be in time order.
GameRecord read_game_record(std::istream& in);
GameRecord load_game_record(const std::filesystem::path& path);

/// Task whose target is the final row's structure and whose dialog is the final chat history.
/// The structure standing just before each new architect turn becomes the sub-goal of the
/// previous turn; the sub-goals are dropped when those snapshots are not cumulative.
Task task_from_game_record(const GameRecord& record, std::string id);

}  // namespace gridcraft
