#pragma once

#include <stdexcept>
#include <string>

namespace catmouse {

enum class ErrorKind {
  Parse,
  HasCycle,
  Disconnected,
  Infeasible,        // single-vertex graph: the active game cannot be played
  Precondition,      // input violates an operation's documented precondition
  NoWinningStrategy, // tree contains T*
  TooLarge,          // exceeds the solver's bitmask width
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace catmouse
