#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace confalg {

enum class ErrorCode {
  CompositionNonzero,
  ShapeMismatch,
  InvalidParams,
  UnknownBuiltin,
  ParseError,
  DuplicateLabel,
  ValidationFailed,
  TruncationExceeded,
  InternalD2Nonzero,
  DualizingUnavailable,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class DiagnosticKind {
  Grading,
  GradedCommutativity,
  Associativity,
  Unit,
  Metadata,
  Antisymmetry,
  Jacobi,
};

std::string_view to_string(DiagnosticKind kind);

/// One violated identity, with the basis labels that witness it.
struct Diagnostic {
  DiagnosticKind kind;
  std::vector<std::string> witnesses;
  std::string message;

  std::string str() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace confalg
