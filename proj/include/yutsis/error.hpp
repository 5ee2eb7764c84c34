#pragma once

#include <stdexcept>
#include <string>

namespace yutsis {

// Failure cases raised by validation, search and parsing routines. Each has
// a stable name so the CLI and tests can match on the case rather than on
// message prose.
enum class ErrorCode {
  OddVertexCount,
  TooSmall,
  Loop,
  DuplicateEdge,
  WrongDegree,
  Disconnected,
  NotACycle,
  NonHamiltonian,
  ParseError,
  IllegalDistance,
  InconsistentChords,
  ChordCollision,
  BadToken,
  FactorArity,
  LabelRepeatInFactor,
  LabelCount,
  SameSignPair,
  OddFactorCount,
  MultiEdge,
  NotInCatalog,
  NotFound,
  EigenNonConvergence,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace yutsis
