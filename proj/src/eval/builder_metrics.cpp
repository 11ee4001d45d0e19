#include "gridcraft/eval/builder_metrics.hpp"

#include <stdexcept>

#include "gridcraft/errors.hpp"
#include "gridcraft/matcher.hpp"

namespace gridcraft::eval {

double reward_score(std::span<const double> returns) {
  if (returns.empty()) throw EmptyInput("reward score needs at least one episode");
  double sum = 0.0;
  for (const double g : returns) sum += g;
  return sum / static_cast<double>(returns.size());
}

double success_score(const std::vector<bool>& successes) {
  if (successes.empty()) throw EmptyInput("success score needs at least one episode");
  std::size_t solved = 0;
  for (const bool s : successes) solved += s ? 1 : 0;
  return static_cast<double>(solved) / static_cast<double>(successes.size());
}

double normalized_hamming(const VoxelGrid& built, const VoxelGrid& target) {
  const int built_size = built.nonair();
  const int target_size = target.nonair();
  if (built_size + target_size == 0) return 0.0;
  const Alignment a = closest_alignment(built, target);
  const int occupied = built_size + target_size - a.overlap;
  return static_cast<double>(occupied - a.score) / static_cast<double>(occupied);
}

double completion_rate(std::span<const double> rhos) {
  if (rhos.empty()) throw EmptyInput("completion rate needs at least one episode");
  double sum = 0.0;
  for (const double rho : rhos) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
    sum += 1.0 - rho;
  }
  return sum / static_cast<double>(rhos.size());
}

BuilderScores score_episodes(const std::vector<EpisodeRecord>& episodes) {
  std::vector<double> returns;
  std::vector<bool> successes;
  std::vector<double> rhos;
  for (const auto& e : episodes) {
    returns.push_back(static_cast<double>(e.total_return()));
    successes.push_back(e.success());
    rhos.push_back(e.rho);
  }
  return {reward_score(returns), success_score(successes), completion_rate(rhos),
          static_cast<int>(episodes.size())};
}

Json to_json(const BuilderScores& scores) {
  return {{"S_r", scores.reward}, {"S_s", scores.success}, {"S_c", scores.completion}, {"N", scores.episodes}};
}

}  // namespace gridcraft::eval
