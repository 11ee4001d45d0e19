#include "external_agent.hpp"

#include <csignal>
#include <cstring>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include "gridcraft/errors.hpp"
#include "gridcraft/io.hpp"

extern char** environ;

namespace gridcraft::cli {

namespace {

[[noreturn]] void fail(const std::string& command, const std::string& what) {
  throw AgentProtocolError("external agent '" + command + "': " + what);
}

}  // namespace

ExternalAgent::ExternalAgent(const std::string& command) : command_(command) {
  // A dead agent must surface as a write error, not kill the runner.
  std::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) fail(command_, std::strerror(errno));
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    fail(command_, std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
  for (const int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) posix_spawn_file_actions_addclose(&actions, fd);

  std::string shell = "/bin/sh";
  std::string flag = "-c";
  std::string cmd = command_;
  char* argv[] = {shell.data(), flag.data(), cmd.data(), nullptr};
  const int rc = posix_spawn(&pid_, "/bin/sh", &actions, nullptr, argv, environ);
  posix_spawn_file_actions_destroy(&actions);
  close(in_pipe[0]);
  close(out_pipe[1]);
  if (rc != 0) {
    close(in_pipe[1]);
    close(out_pipe[0]);
    pid_ = -1;
    fail(command_, std::string("cannot start: ") + std::strerror(rc));
  }
  to_agent_ = fdopen(in_pipe[1], "w");
  from_agent_ = fdopen(out_pipe[0], "r");
}

ExternalAgent::~ExternalAgent() {
  if (to_agent_) std::fclose(to_agent_);
  if (from_agent_) std::fclose(from_agent_);
  if (pid_ > 0) {
    int status = 0;
    waitpid(pid_, &status, 0);
  }
}

void ExternalAgent::begin(const Environment&, std::uint64_t seed) { seed_ = seed; }

Action ExternalAgent::act(const Environment& env, const Observation& obs) {
  const Json message = {{"task_id", env.task().id},
                        {"mode", std::string(to_string(env.mode()))},
                        {"seed", seed_},
                        {"t", env.steps()},
                        {"observation", observation_to_json(obs, true)}};
  const std::string line = message.dump() + "\n";
  if (std::fwrite(line.data(), 1, line.size(), to_agent_) != line.size() || std::fflush(to_agent_) != 0) {
    fail(command_, "cannot write observation (process exited?)");
  }

  std::string reply;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, from_agent_)) {
    reply += buf;
    if (!reply.empty() && reply.back() == '\n') break;
  }
  if (reply.empty()) fail(command_, "closed its output at step " + std::to_string(env.steps()));
  try {
    const Action action = action_from_json(Json::parse(reply));
    if (mode_of(action) != env.mode()) fail(command_, "sent an action for the wrong control mode");
    return action;
  } catch (const ParseError& e) {
    fail(command_, std::string("bad action: ") + e.what());
  } catch (const Json::exception& e) {
    fail(command_, std::string("bad action: ") + e.what());
  }
}

}  // namespace gridcraft::cli
