#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace efl {

enum class ErrorCode {
  EmptyEdge,
  VertexOutOfRange,
  IsolatedVertex,
  DuplicateVertexInEdge,
  PreconditionViolated,
  PartitionFailure,
  GreedyStall,
  NotUniform,
  NotLinear,
  NotWeaklyDense,
  PartialColoring,
  TooLarge,
  NoColoringWithinLimit,
  NotPrime,
  ExhaustedAttempts,
  SyntaxError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PartitionFailure: return "PartitionFailure";
    case ErrorCode::GreedyStall: return "GreedyStall";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NotWeaklyDense: return "NotWeaklyDense";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoColoringWithinLimit: return "NoColoringWithinLimit";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. The code identifies the
/// failure class; what() carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// First-fit found no free color for `vertex`.
class GreedyStallError : public Error {
 public:
  GreedyStallError(std::size_t vertex, const std::string& detail)
      : Error(ErrorCode::GreedyStall, detail), vertex_(vertex) {}

  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

/// Errors raised while reading a text file; line() is 1-based, 0 when the
/// problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& detail)
      : Error(code, "line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace efl
