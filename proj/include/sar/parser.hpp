#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sar/ast.hpp"
#include "sar/literals.hpp"

namespace sar {

struct Token {
  std::string text;
  Span span;

  bool operator==(const Token&) const = default;
};

// Whitespace split; every non-space byte lands in exactly one token.
std::vector<Token> tokenize(std::string_view source);

struct ParseResult {
  SarApp app;
  // The seed bindings plus any raw literals interned during the parse.
  LiteralDict literals;
};

// Recursive descent over the SAR grammar. Alias spellings are normalized.
// Semantic checks are left to validate(). `end_offset` is the span reported
// for errors at end of input.
ParseResult parse(std::span<const Token> tokens, std::size_t end_offset,
                  const Catalog& catalog = Catalog::builtin(),
                  LiteralDict literals = {});

ParseResult parse(std::string_view source,
                  const Catalog& catalog = Catalog::builtin(),
                  LiteralDict literals = {});

}  // namespace sar
