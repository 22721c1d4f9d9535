#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sar/catalog.hpp"
#include "sar/errors.hpp"

namespace sar {

struct ComponentRef {
  std::string kind;
  int index = 0;

  auto operator<=>(const ComponentRef&) const = default;
};

// A literal placeholder such as string0 or number3. Raw text never lives
// in the tree; it is interned into a LiteralDict first.
struct LiteralRef {
  std::string placeholder;

  auto operator<=>(const LiteralRef&) const = default;
};

// A readable component property, e.g. textbox1text.
struct PropertyRef {
  ComponentRef component;
  std::string property;

  auto operator<=>(const PropertyRef&) const = default;
};

using ValueRef = std::variant<LiteralRef, PropertyRef>;

// A value bound to a named schema slot. An empty name marks a positional
// value that found no free slot; validate() reports it.
struct ArgBinding {
  std::string name;
  ValueRef value;

  auto operator<=>(const ArgBinding&) const = default;
};

struct ComponentInst {
  std::string kind;
  int index = 0;
  std::vector<ArgBinding> args;

  ComponentRef ref() const { return {kind, index}; }
  // Argument order is not significant.
  bool operator==(const ComponentInst& other) const;
};

struct ActionInst {
  std::string action;
  ComponentRef target;
  std::vector<ArgBinding> values;

  bool operator==(const ActionInst& other) const;
};

struct EventRef {
  ComponentRef component;
  std::string event;

  auto operator<=>(const EventRef&) const = default;
};

struct EventBlock {
  EventRef event;
  std::vector<ActionInst> actions;

  bool operator==(const EventBlock&) const = default;
};

struct Screen {
  std::vector<ComponentInst> components;
  std::vector<EventBlock> code;

  bool operator==(const Screen&) const = default;
  const ComponentInst* find(const ComponentRef& ref) const;
};

struct SarApp {
  std::vector<Screen> screens;

  bool operator==(const SarApp&) const = default;
};

enum class LiteralFamily { kString, kNumber };

// True for string<N> / number<N> with N a canonical decimal.
bool is_placeholder(std::string_view token);
LiteralFamily placeholder_family(std::string_view placeholder);

// Canonical SAR spelling of references.
std::string value_token(const ValueRef& value);
std::string property_token(const PropertyRef& property);
std::string event_token(const EventRef& event,
                        const Catalog& catalog = Catalog::builtin());
std::string action_token(const ActionInst& action,
                         const Catalog& catalog = Catalog::builtin());

// Canonical space-separated SAR text. Throws InvariantViolation when
// validate() reports anything.
std::string serialize(const SarApp& app,
                      const Catalog& catalog = Catalog::builtin());

// Empty iff every structural invariant and catalog rule holds.
std::vector<Diagnostic> validate(const SarApp& app,
                                 const Catalog& catalog = Catalog::builtin());

// Throws InvariantViolation unless validate() is clean.
void check_valid(const SarApp& app,
                 const Catalog& catalog = Catalog::builtin());

}  // namespace sar
