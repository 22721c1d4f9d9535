#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sar/ast.hpp"
#include "sar/literals.hpp"
#include "sar/snippets.hpp"

namespace sar {

class NoComponentsFound : public Error {
 public:
  explicit NoComponentsFound(const std::string& message)
      : Error("NO_COMPONENTS_FOUND", message) {}
};

struct NlReport {
  std::vector<std::string> unmatched;  // clauses that produced nothing
  std::vector<std::string> warnings;   // ambiguities and dropped values
};

struct NlResult {
  SarApp app;
  std::string sar;
  LiteralDict dict;
  NlReport report;
};

// Rule-based translation of template-style descriptions. Quoted text and
// numbers are extracted first; placeholders already in `nl` are looked up
// in `known`. Throws NoComponentsFound when nothing names a component and
// InvariantViolation when the mentioned components break catalog rules.
NlResult nl_to_sar(std::string_view nl, const LiteralDict& known = {},
                   const Catalog& catalog = Catalog::builtin(),
                   const Snippets& snippets = Snippets::builtin(),
                   const Lexicon& lexicon = Lexicon::builtin());

}  // namespace sar
