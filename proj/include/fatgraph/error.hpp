#pragma once

#include <stdexcept>
#include <string>

namespace fg {

enum class ErrorKind {
  MultipleBoundaryCycles,
  Disconnected,
  BadValence,
  MalformedPermutation,
  Parse,
  TailEdge,
  LoopEdge,
  NoSuchEdge,
  NotTrivalent,
  InvalidInputs,
  SameEdge,
  DimensionMismatch,
  NotClosed,
  Overflow,
  NotInQ,
  SingularGram,
  OddCornerCount,
  GenusTooLarge,
  FlipFailed,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fg
