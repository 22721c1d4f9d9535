#include "sar/errors.hpp"

#include <utility>

namespace sar {

std::string to_string(const Diagnostic& diagnostic) {
  std::string out = diagnostic.code;
  if (!diagnostic.path.empty()) out += " at " + diagnostic.path;
  out += ": " + diagnostic.message;
  return out;
}

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)) {}

SyntaxError::SyntaxError(const std::string& message, Span span)
    : Error("SYNTAX_ERROR", message + " (bytes " + std::to_string(span.begin) +
                                "-" + std::to_string(span.end) + ")"),
      span_(span) {}

NotFound::NotFound(const std::string& what)
    : Error("NOT_FOUND", "not found: " + what) {}

MissingLiteral::MissingLiteral(const std::string& placeholder)
    : Error("MISSING_LITERAL", "missing literal: " + placeholder),
      placeholder_(placeholder) {}

UnbalancedQuote::UnbalancedQuote(std::size_t offset)
    : Error("UNBALANCED_QUOTE",
            "quote opened at byte " + std::to_string(offset) +
                " is never closed"),
      offset_(offset) {}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invariant violation";
  for (const auto& d : diagnostics) out += "\n  " + to_string(d);
  return out;
}

}  // namespace

InvariantViolation::InvariantViolation(std::vector<Diagnostic> diagnostics)
    : Error("INVARIANT_VIOLATION", summarize(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace sar
