#pragma once

#include <cstdio>
#include <string>
#include <sys/types.h>

#include "gridcraft/agents.hpp"
#include "gridcraft/errors.hpp"

namespace gridcraft::cli {

/// Runs `command` through /bin/sh and talks to it over its standard streams, one JSON
/// object per line. For every decision the agent receives
///   {"task_id": ..., "mode": ..., "seed": ..., "t": steps so far, "observation": {...}}
/// and must answer with one action line in the episode-log action format.
/// Throws AgentProtocolError when the process cannot start, closes its output or sends
/// something that is not an action.
class ExternalAgent final : public Agent {
 public:
  explicit ExternalAgent(const std::string& command);
  ~ExternalAgent() override;
  ExternalAgent(const ExternalAgent&) = delete;
  ExternalAgent& operator=(const ExternalAgent&) = delete;

  void begin(const Environment& env, std::uint64_t seed) override;
  Action act(const Environment& env, const Observation& obs) override;

 private:
  std::string command_;
  pid_t pid_ = -1;
  std::FILE* to_agent_ = nullptr;
  std::FILE* from_agent_ = nullptr;
  std::uint64_t seed_ = 0;
};

class AgentProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridcraft::cli
