#include "gridcraft/game_record.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "gridcraft/errors.hpp"
#include "gridcraft/io.hpp"

namespace gridcraft {

namespace {

constexpr std::string_view kArchitectTag = "<Architect>";
constexpr std::string_view kBuilderTag = "<Builder>";

Utterance parse_turn(std::string_view line) {
  Utterance u;
  if (line.starts_with(kBuilderTag)) {
    u.speaker = Speaker::Builder;
    line.remove_prefix(kBuilderTag.size());
  } else if (line.starts_with(kArchitectTag)) {
    line.remove_prefix(kArchitectTag.size());
  }
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  u.text = std::string(line);
  return u;
}

int architect_turns(const std::vector<std::string>& chat) {
  int n = 0;
  for (const auto& line : chat) {
    if (std::string_view(line).starts_with(kArchitectTag)) ++n;
  }
  return n;
}

GameRow parse_row(const Json& j) {
  GameRow row;
  row.timestamp = j.at("timestamp").get<std::string>();
  const auto& chat = j.at("chat");
  if (chat.is_string()) {
    std::string_view rest = chat.get_ref<const std::string&>();
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      const auto line = rest.substr(0, nl);
      if (!line.empty()) row.chat.emplace_back(line);
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
  } else {
    row.chat = chat.get<std::vector<std::string>>();
  }
  row.pose = j.at("pose").get<std::array<double, 5>>();
  row.inventory = j.at("inventory").get<std::array<int, kNumColors>>();
  for (const auto& b : j.at("blocks")) {
    const auto v = b.get<std::array<int, 4>>();
    const auto cell = CellCoord::checked(v[0], v[2], v[1]);
    if (!cell) throw ParseError("block outside the building zone");
    if (v[3] < 1 || v[3] > kNumColors) throw ParseError("block id must be 1..6");
    row.blocks.set(*cell, static_cast<BlockId>(v[3]));
  }
  return row;
}

}  // namespace

GameRecord read_game_record(std::istream& in) {
  GameRecord record;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    GameRow row;
    try {
      row = parse_row(Json::parse(line));
    } catch (const Json::exception& e) {
      throw ParseError(e.what(), number);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
    if (!record.rows.empty() && row.timestamp < record.rows.back().timestamp) {
      throw ValidationError("rows are not in time order", number);
    }
    record.rows.push_back(std::move(row));
  }
  return record;
}

GameRecord load_game_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open game record " + path.string());
  return read_game_record(in);
}

Task task_from_game_record(const GameRecord& record, std::string id) {
  if (record.rows.empty()) throw ValidationError("game record has no rows");
  Task task;
  task.id = std::move(id);
  const GameRow& last = record.rows.back();
  task.target = last.blocks;

  std::vector<int> architect_index;
  for (const auto& line : last.chat) {
    task.dialog.push_back(parse_turn(line));
    if (task.dialog.back().speaker == Speaker::Architect) architect_index.push_back(static_cast<int>(task.dialog.size()) - 1);
  }

  std::vector<Subgoal> subgoals;
  int seen = 0;
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    const int now = architect_turns(record.rows[r].chat);
    if (now > seen && seen > 0 && r > 0 && !record.rows[r - 1].blocks.empty()) {
      const auto turn = static_cast<std::size_t>(seen) - 1;
      subgoals.push_back({record.rows[r - 1].blocks, turn < architect_index.size()
                                                         ? std::optional<int>(architect_index[turn])
                                                         : std::nullopt});
    }
    seen = std::max(seen, now);
  }
  subgoals.push_back({task.target, architect_index.empty() ? std::nullopt
                                                           : std::optional<int>(architect_index.back())});

  bool cumulative = true;
  for (std::size_t i = 0; i + 1 < subgoals.size(); ++i) {
    cumulative = cumulative && is_substructure(subgoals[i].grid, subgoals[i + 1].grid);
  }
  if (cumulative) task.subgoals = std::move(subgoals);
  return task;
}

}  // namespace gridcraft
