#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmapkit {

// Stable one-line codes. The CLI prints these verbatim, so never rename one.
enum class ErrorCode {
  incidence,      // E_INCIDENCE
  cycle,          // E_CYCLE
  embedding,      // E_EMBED
  match,          // E_MATCH
  dangling,       // E_DANGLING
  post_validation,// E_POSTVALID
  syntax,         // E_SYNTAX
  graph,          // E_GRAPH: duplicate/unknown node, bad arity, dimension out of range
  unknown_dart,   // E_DART
  relabel,        // E_RELABEL
  scheme,         // E_SCHEME: semantic errors in graph/rule schemes
  mesh,           // E_MESH: malformed face, non-manifold edge
  directive,      // E_DIRECTIVE: embedding directives
  precondition,   // E_PRECOND
  io,             // E_IO
};

inline std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::incidence: return "E_INCIDENCE";
    case ErrorCode::cycle: return "E_CYCLE";
    case ErrorCode::embedding: return "E_EMBED";
    case ErrorCode::match: return "E_MATCH";
    case ErrorCode::dangling: return "E_DANGLING";
    case ErrorCode::post_validation: return "E_POSTVALID";
    case ErrorCode::syntax: return "E_SYNTAX";
    case ErrorCode::graph: return "E_GRAPH";
    case ErrorCode::unknown_dart: return "E_DART";
    case ErrorCode::relabel: return "E_RELABEL";
    case ErrorCode::scheme: return "E_SCHEME";
    case ErrorCode::mesh: return "E_MESH";
    case ErrorCode::directive: return "E_DIRECTIVE";
    case ErrorCode::precondition: return "E_PRECOND";
    case ErrorCode::io: return "E_IO";
  }
  return "E_UNKNOWN";
}

/// Base exception for every failure raised by the kernel.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by text parsers; carries a 1-based line/column, or 0/0 when the
/// message locates the error some other way (a JSON path).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::syntax,
              line ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gmapkit
