#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sar/ast.hpp"
#include "sar/literals.hpp"

namespace sar {

// Observable outcome of one action, e.g. Spoke("hello") or
// MediaStarted(player1).
struct Effect {
  std::string name;
  std::string component;  // empty unless the effect names its target
  std::optional<std::string> value;

  std::string text() const;
  bool operator==(const Effect&) const = default;
};

// One executed block: the designer instance and the method it invoked,
// or "set:<Property>" for a setter.
struct TraceStep {
  std::string instance;
  std::string member;

  bool operator==(const TraceStep&) const = default;
};

// A state change applied before an event fires (user typing, etc.).
struct Input {
  ComponentRef component;
  std::string key;
  std::string value;
};

// Interpreter state for screen 1 of an app. Copies share the immutable
// program and own their mutable component state and logs.
class AppState {
 public:
  // Components start at catalog defaults. Throws InvariantViolation for
  // invalid apps and MissingLiteral for unbound placeholders.
  static AppState init(const SarApp& app, const LiteralDict& dict,
                       const Catalog& catalog = Catalog::builtin());

  // Throws NotFound for unknown components or keys.
  const std::string& get(const ComponentRef& component,
                         std::string_view key) const;
  void set(const ComponentRef& component, std::string_view key,
           std::string value);

  const std::vector<Effect>& effects() const { return effects_; }
  const std::vector<TraceStep>& trace() const { return trace_; }
  bool handles(const EventRef& event) const;

  // Runs the handler for `event`, if any. Events on absent components
  // or without a handler leave the state untouched.
  void fire(const EventRef& event);

  const std::map<ComponentRef, std::map<std::string, std::string>>& state()
      const {
    return state_;
  }

 private:
  struct Program {
    Screen screen;
    LiteralDict dict;
    const Catalog* catalog;
  };

  std::string resolve(const ValueRef& value) const;
  void run(const ActionInst& action);

  std::shared_ptr<const Program> program_;
  std::map<ComponentRef, std::map<std::string, std::string>> state_;
  std::vector<Effect> effects_;
  std::vector<TraceStep> trace_;
};

AppState fire(AppState state, const EventRef& event,
              const std::vector<Input>& inputs = {});

// "button1_clicked" or "<button1clicked>" to an EventRef.
std::optional<EventRef> event_from_token(
    std::string_view token, const Catalog& catalog = Catalog::builtin());

// Simulation script: `set <component> <key> <value...>` and `fire <event>`
// lines; blank lines and '#' comments are skipped. Returns the effects
// rendered one per line. Throws ConfigError on malformed lines.
std::vector<std::string> run_script(AppState& state, std::string_view script,
                                    const Catalog& catalog = Catalog::builtin());

}  // namespace sar
