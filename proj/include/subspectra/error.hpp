#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subspectra {

enum class ErrorCode {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  EmptyArcSet,
  EmptyEdgeSet,
  BothZero,
  DivisionByZeroFunction,
  NotPolynomial,
  NoConvergence,
  NotSquare,
  TooLarge,
  DimensionMismatch,
  ZeroScale,
  NotOutRegular,
  UnsupportedMatrixKind,
  InvalidParams,
  UnknownTheorem,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Exception thrown by every library operation; `code()` identifies the
/// contract violation so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subspectra
