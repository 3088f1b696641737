#include "confalg/errors.hpp"

namespace confalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::InternalD2Nonzero: return "InternalD2Nonzero";
    case ErrorCode::DualizingUnavailable: return "DualizingUnavailable";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::Grading: return "Grading";
    case DiagnosticKind::GradedCommutativity: return "GradedCommutativity";
    case DiagnosticKind::Associativity: return "Associativity";
    case DiagnosticKind::Unit: return "Unit";
    case DiagnosticKind::Metadata: return "Metadata";
    case DiagnosticKind::Antisymmetry: return "Antisymmetry";
    case DiagnosticKind::Jacobi: return "Jacobi";
  }
  return "Unknown";
}

std::string Diagnostic::str() const {
  std::string out(to_string(kind));
  if (!witnesses.empty()) {
    out += " (";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) out += ", ";
      out += witnesses[i];
    }
    out += ")";
  }
  if (!message.empty()) out += ": " + message;
  return out;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string out = std::to_string(diagnostics.size()) + " diagnostic(s)";
  if (!diagnostics.empty()) out += "; first: " + diagnostics.front().str();
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::ValidationFailed, summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace confalg
