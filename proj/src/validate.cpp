#include <map>
#include <set>

#include "sar/ast.hpp"

namespace sar {

namespace {

std::string indexed(const std::string& base, const char* field,
                    std::size_t i) {
  return base + "." + field + "[" + std::to_string(i) + "]";
}

std::string ref_name(const ComponentRef& ref) {
  return ref.kind + std::to_string(ref.index);
}

class Validator {
 public:
  explicit Validator(const Catalog& catalog) : catalog_(catalog) {}

  std::vector<Diagnostic> run(const SarApp& app) {
    if (app.screens.empty()) {
      report("EMPTY_APP", "an app needs at least one screen", "screens");
    }
    for (std::size_t s = 0; s < app.screens.size(); ++s) {
      screen(app.screens[s], "screens[" + std::to_string(s) + "]");
    }
    return std::move(out_);
  }

 private:
  void report(std::string code, std::string message, std::string path) {
    out_.push_back({std::move(code), std::move(message), std::move(path)});
  }

  void screen(const Screen& screen, const std::string& path) {
    std::map<std::string, int> counts;
    for (std::size_t i = 0; i < screen.components.size(); ++i) {
      const auto& comp = screen.components[i];
      const auto where = indexed(path, "components", i);
      const auto* entry = catalog_.find(comp.kind);
      if (entry == nullptr) {
        report("UNKNOWN_COMPONENT", "unknown component kind '" + comp.kind + "'",
               where);
        continue;
      }
      const int expected = ++counts[comp.kind];
      if (comp.index < 1) {
        report("INVALID_INDEX", "component index must be positive", where);
      } else if (comp.index != expected) {
        report("NON_DENSE_INDEX",
               comp.kind + " numbered " + std::to_string(comp.index) +
                   " but expected " + std::to_string(expected),
               where);
      }
      if (entry->singleton && expected == 2) {
        report("SINGLETON_VIOLATION",
               "'" + comp.kind + "' can only appear once per screen", where);
      }
      component_args(*entry, comp, where);
    }
    std::set<EventRef> handled;
    for (std::size_t i = 0; i < screen.code.size(); ++i) {
      const auto& block = screen.code[i];
      const auto where = indexed(path, "code", i);
      event(screen, block.event, where);
      if (!handled.insert(block.event).second) {
        report("DUPLICATE_EVENT_HANDLER",
               "second handler for " + ref_name(block.event.component) + " " +
                   block.event.event,
               where);
      }
      if (block.actions.empty()) {
        report("EMPTY_EVENT", "an event needs at least one action", where);
      }
      for (std::size_t a = 0; a < block.actions.size(); ++a) {
        action(screen, block.actions[a], indexed(where, "actions", a));
      }
    }
  }

  void component_args(const CatalogEntry& entry,
                      const ComponentInst& comp, const std::string& path) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < comp.args.size(); ++i) {
      const auto& arg = comp.args[i];
      const auto where = indexed(path, "args", i);
      if (arg.name.empty()) {
        report("TOO_MANY_ARGUMENTS",
               "'" + comp.kind + "' takes " + std::to_string(entry.args.size()) +
                   " argument(s)",
               where);
        continue;
      }
      const auto* spec = entry.find_arg(arg.name);
      if (spec == nullptr) {
        report("UNKNOWN_ARGUMENT",
               "'" + comp.kind + "' has no argument '" + arg.name + "'", where);
        continue;
      }
      if (!seen.insert(arg.name).second) {
        report("DUPLICATE_ARGUMENT", "argument '" + arg.name + "' given twice",
               where);
      }
      if (std::holds_alternative<PropertyRef>(arg.value)) {
        report("PROPERTY_NOT_ALLOWED",
               "component arguments take literals, not properties", where);
        continue;
      }
      const auto& placeholder = std::get<LiteralRef>(arg.value).placeholder;
      if (!is_placeholder(placeholder)) {
        report("INVALID_PLACEHOLDER", "'" + placeholder + "' is not a placeholder",
               where);
        continue;
      }
      const bool number = placeholder_family(placeholder) == LiteralFamily::kNumber;
      const bool ok = spec->type == ArgType::kString ||
                      (spec->type == ArgType::kNumber && number) ||
                      (spec->type == ArgType::kColor && !number);
      if (!ok) {
        report("ARGUMENT_TYPE_MISMATCH",
               "'" + placeholder + "' does not fit argument '" + arg.name + "'",
               where);
      }
    }
  }

  void event(const Screen& screen, const EventRef& event,
             const std::string& path) {
    const auto* comp = screen.find(event.component);
    if (comp == nullptr) {
      report("DANGLING_COMPONENT_REF",
             "no component " + ref_name(event.component) + " on this screen",
             path);
      return;
    }
    const auto& entry = catalog_.lookup(comp->kind);
    if (entry.find_event(event.event) == nullptr) {
      report("UNKNOWN_EVENT",
             "'" + entry.kind + "' has no event '" + event.event + "'", path);
    }
  }

  void action(const Screen& screen, const ActionInst& action,
              const std::string& path) {
    const auto* entry = catalog_.find(action.target.kind);
    if (entry == nullptr) {
      report("UNKNOWN_COMPONENT",
             "unknown component kind '" + action.target.kind + "'", path);
      return;
    }
    const auto* spec = entry->find_action(action.action);
    if (spec == nullptr) {
      report("UNKNOWN_ACTION",
             "'" + entry->kind + "' has no action '" + action.action + "'",
             path);
      return;
    }
    if (screen.find(action.target) == nullptr) {
      report("DANGLING_COMPONENT_REF",
             "no component " + ref_name(action.target) + " on this screen",
             path);
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < action.values.size(); ++i) {
      const auto& value = action.values[i];
      const auto where = indexed(path, "values", i);
      if (value.name.empty()) {
        report("TOO_MANY_ARGUMENTS",
               "'" + action.action + "' takes " +
                   std::to_string(spec->params.size()) + " value(s)",
               where);
        continue;
      }
      const auto* param = spec->find_param(value.name);
      if (param == nullptr) {
        report("UNKNOWN_ARGUMENT",
               "'" + action.action + "' has no parameter '" + value.name + "'",
               where);
        continue;
      }
      if (!seen.insert(value.name).second) {
        report("DUPLICATE_ARGUMENT", "parameter '" + value.name + "' given twice",
               where);
      }
      action_value(screen, *param, value.value, where);
    }
    for (const auto& param : spec->params) {
      if (!seen.count(param.name)) {
        report("MISSING_ARGUMENT",
               "'" + action.action + "' needs a value for '" + param.name + "'",
               path);
      }
    }
  }

  void action_value(const Screen& screen, const ParamSpec& param,
                    const ValueRef& value, const std::string& path) {
    if (const auto* prop = std::get_if<PropertyRef>(&value)) {
      const auto* comp = screen.find(prop->component);
      if (comp == nullptr) {
        report("DANGLING_COMPONENT_REF",
               "no component " + ref_name(prop->component) + " on this screen",
               path);
        return;
      }
      if (catalog_.lookup(comp->kind).find_property(prop->property) == nullptr) {
        report("UNKNOWN_PROPERTY",
               "'" + comp->kind + "' has no property '" + prop->property + "'",
               path);
        return;
      }
      if (!param.accepts_kind(ValueKind::kProperty)) {
        report("ARGUMENT_TYPE_MISMATCH",
               "parameter '" + param.name + "' does not take a property", path);
      }
      return;
    }
    const auto& placeholder = std::get<LiteralRef>(value).placeholder;
    if (!is_placeholder(placeholder)) {
      report("INVALID_PLACEHOLDER", "'" + placeholder + "' is not a placeholder",
             path);
      return;
    }
    const bool number = placeholder_family(placeholder) == LiteralFamily::kNumber;
    const bool ok = number ? param.accepts_kind(ValueKind::kNumber)
                           : param.accepts_kind(ValueKind::kString) ||
                                 param.accepts_kind(ValueKind::kColor);
    if (!ok) {
      report("ARGUMENT_TYPE_MISMATCH",
             "'" + placeholder + "' does not fit parameter '" + param.name + "'",
             path);
    }
  }

  const Catalog& catalog_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const SarApp& app, const Catalog& catalog) {
  return Validator(catalog).run(app);
}

}  // namespace sar
