#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridcraft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OccupiedCell : public Error {
 public:
  using Error::Error;
};

class AirBlock : public Error {
 public:
  using Error::Error;
};

class AirCell : public Error {
 public:
  using Error::Error;
};

class InvalidTask : public Error {
 public:
  using Error::Error;
};

class EpisodeFinished : public Error {
 public:
  using Error::Error;
};

/// An action whose variant does not match the episode's control mode.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

/// Malformed input. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that breaks a data invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A replayed episode diverged from its log.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& what, int episode, int step)
      : Error(what), episode_(episode), step_(step) {}

  int episode() const noexcept { return episode_; }
  int step() const noexcept { return step_; }

 private:
  int episode_;
  int step_;
};

}  // namespace gridcraft
