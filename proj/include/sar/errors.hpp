#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sar {

/// Byte range [begin, end) into some source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

/// A validation finding. `code` is a stable SCREAMING_CASE identifier,
/// `path` locates the offending node (e.g. "screens[0].components[2]").
struct Diagnostic {
  std::string code;
  std::string message;
  std::string path;

  bool operator==(const Diagnostic&) const = default;
};

std::string to_string(const Diagnostic& diagnostic);

/// Base of every error raised by the toolchain. `code()` mirrors the
/// diagnostic codes so the CLI can report failures uniformly.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, Span span);

  Span span() const noexcept { return span_; }

 private:
  Span span_;
};

class NotFound : public Error {
 public:
  explicit NotFound(const std::string& what);
};

class MissingLiteral : public Error {
 public:
  explicit MissingLiteral(const std::string& placeholder);

  const std::string& placeholder() const noexcept { return placeholder_; }

 private:
  std::string placeholder_;
};

class UnbalancedQuote : public Error {
 public:
  explicit UnbalancedQuote(std::size_t offset);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error("CONFIG_ERROR", message) {}
};

class NoCandidate : public Error {
 public:
  explicit NoCandidate(const std::string& message)
      : Error("NO_CANDIDATE", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IO_ERROR", message) {}
};

}  // namespace sar
