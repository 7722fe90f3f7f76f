#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twomode {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  IntraPartEdge,
  DisconnectedGraph,
  InvalidSize,
  NonConvergence,
  NotATree,
  RootNotAdjacentToAllA1,
  DegreeGapTooSmall,
  RootDegreeOne,
  ContextMismatch,
  SizeLimitExceeded,
  MalformedLine,
  DuplicatePair,
  LabelInBothParts,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every validation failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twomode
