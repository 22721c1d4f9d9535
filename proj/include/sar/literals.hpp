#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sar/ast.hpp"

namespace sar {

// Ordered placeholder -> value bindings (string0 -> "Speak"). Numbers keep
// the lexeme they were written with.
class LiteralDict {
 public:
  using Entry = std::pair<std::string, std::string>;

  LiteralDict() = default;
  LiteralDict(std::initializer_list<Entry> entries);

  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const std::string* find(std::string_view name) const;
  // Throws MissingLiteral.
  const std::string& at(std::string_view name) const;

  // Inserts or overwrites, keeping first-insertion order.
  void set(std::string name, std::string value);

  // Smallest index above every bound name of the family.
  std::string next_name(LiteralFamily family) const;
  // Binds `value` under next_name(family) and returns that name.
  std::string intern(LiteralFamily family, std::string value);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const LiteralDict&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Sidecar format: one `name<TAB>value` line per entry; backslash, tab and
// newline inside values are escaped as \\, \t and \n.
std::string to_sidecar(const LiteralDict& dict);
LiteralDict from_sidecar(std::string_view text);

// Compact JSON object in entry order, e.g. {"string0":"Speak"}.
std::string to_json(const LiteralDict& dict);
LiteralDict dict_from_json(std::string_view text);

struct Extraction {
  std::string text;
  LiteralDict dict;
};

// Replaces quoted spans with string<N> and standalone numbers with
// number<N>, numbered per family in order of appearance. Placeholders
// already present are kept and new ones continue after them. A number
// directly followed by a component noun ("2 buttons") is a quantity and
// stays in place.
Extraction extract_literals(std::string_view nl);

// Inverse of extract_literals: strings come back double-quoted, numbers
// bare. Throws MissingLiteral for unbound placeholders.
std::string restore_literals(std::string_view templated,
                             const LiteralDict& dict);

// Drops every quote character, for comparing text modulo quoting.
std::string strip_quotes(std::string_view text);

}  // namespace sar
