#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "gridcraft/environment.hpp"

namespace gridcraft {

/// Chooses one action per tick. `begin` is called after every reset.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual void begin(const Environment& env, std::uint64_t seed) = 0;
  virtual Action act(const Environment& env, const Observation& obs) = 0;
};

/// Uniformly random actions for the environment's mode, seeded per episode.
std::unique_ptr<Agent> make_random_agent();

/// Builds the target cell by cell at its own coordinates, so every placement raises the
/// match score by one. Assumes the initial world is empty and every target block rests on
/// the ground or on another target block. Returns no-ops once nothing is left to do.
std::unique_ptr<Agent> make_scripted_agent();

/// "random" or "scripted_optimal"; nullptr otherwise.
std::unique_ptr<Agent> make_agent(std::string_view name);

}  // namespace gridcraft
