#pragma once

#include <span>
#include <vector>

#include "gridcraft/episode_log.hpp"
#include "gridcraft/io.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace gridcraft::eval {

/// Mean episode return. Throws EmptyInput.
double reward_score(std::span<const double> returns);

/// Fraction of successful episodes. Throws EmptyInput.
double success_score(const std::vector<bool>& successes);

/// Distance between two structures after aligning them: cells that differ divided by
/// cells occupied in either grid, 0 when both are empty. The alignment maximizes the
/// color match, then the occupancy overlap, over all rotations and shifts.
double normalized_hamming(const VoxelGrid& built, const VoxelGrid& target);

/// Mean of (1 - rho). Throws EmptyInput, and std::invalid_argument for rho outside [0, 1].
double completion_rate(std::span<const double> rhos);

struct BuilderScores {
  double reward = 0.0;      ///< S_r
  double success = 0.0;     ///< S_s
  double completion = 0.0;  ///< S_c
  int episodes = 0;         ///< N
};

/// Scores a set of logged episodes. Returns are the summed step rewards.
BuilderScores score_episodes(const std::vector<EpisodeRecord>& episodes);

/// {"S_r": ..., "S_s": ..., "S_c": ..., "N": ...}
Json to_json(const BuilderScores& scores);

}  // namespace gridcraft::eval
