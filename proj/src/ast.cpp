#include "sar/ast.hpp"

#include <algorithm>
#include <cctype>

namespace sar {

namespace {

std::vector<ArgBinding> sorted(std::vector<ArgBinding> args) {
  std::sort(args.begin(), args.end());
  return args;
}

std::string closer(const std::string& open_tag) {
  return "</" + open_tag.substr(1);
}

// Emits bindings in schema order. The longest run of leading schema slots
// that are all bound goes out positionally; the rest are named.
void emit_values(std::string& out, const std::vector<ArgBinding>& values,
                 const std::vector<std::string>& schema) {
  bool positional = true;
  for (const auto& slot : schema) {
    auto it = std::find_if(values.begin(), values.end(),
                           [&](const ArgBinding& b) { return b.name == slot; });
    if (it == values.end()) {
      positional = false;
      continue;
    }
    if (positional) {
      out += " " + value_token(it->value);
    } else {
      out += " <" + slot + "> " + value_token(it->value) + " </" + slot + ">";
    }
  }
}

}  // namespace

bool ComponentInst::operator==(const ComponentInst& other) const {
  return kind == other.kind && index == other.index &&
         sorted(args) == sorted(other.args);
}

bool ActionInst::operator==(const ActionInst& other) const {
  return action == other.action && target == other.target &&
         sorted(values) == sorted(other.values);
}

const ComponentInst* Screen::find(const ComponentRef& ref) const {
  for (const auto& c : components) {
    if (c.kind == ref.kind && c.index == ref.index) return &c;
  }
  return nullptr;
}

bool is_placeholder(std::string_view token) {
  std::string_view digits;
  if (token.substr(0, 6) == "string") {
    digits = token.substr(6);
  } else if (token.substr(0, 6) == "number") {
    digits = token.substr(6);
  } else {
    return false;
  }
  if (digits.empty() || digits.size() > 9) return false;
  if (digits.size() > 1 && digits[0] == '0') return false;
  return std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

LiteralFamily placeholder_family(std::string_view placeholder) {
  return placeholder.substr(0, 6) == "number" ? LiteralFamily::kNumber
                                              : LiteralFamily::kString;
}

std::string property_token(const PropertyRef& property) {
  return "<" + property.component.kind +
         std::to_string(property.component.index) + property.property + ">";
}

std::string value_token(const ValueRef& value) {
  if (const auto* literal = std::get_if<LiteralRef>(&value)) {
    return literal->placeholder;
  }
  return property_token(std::get<PropertyRef>(value));
}

std::string event_token(const EventRef& event, const Catalog& catalog) {
  const auto& entry = catalog.lookup(event.component.kind);
  const auto* spec = entry.find_event(event.event);
  if (spec == nullptr) {
    throw NotFound("event '" + event.event + "' on '" + entry.kind + "'");
  }
  return "<" +
         render_pattern(spec->token, event.component.kind,
                        event.component.index) +
         ">";
}

std::string action_token(const ActionInst& action, const Catalog& catalog) {
  const auto& entry = catalog.lookup(action.target.kind);
  const auto* spec = entry.find_action(action.action);
  if (spec == nullptr) {
    throw NotFound("action '" + action.action + "' on '" + entry.kind + "'");
  }
  return "<" +
         render_pattern(spec->token, action.target.kind, action.target.index) +
         ">";
}

std::string serialize(const SarApp& app, const Catalog& catalog) {
  check_valid(app, catalog);
  std::string out;
  for (std::size_t s = 0; s < app.screens.size(); ++s) {
    const auto& screen = app.screens[s];
    if (s > 0) out += " <NEXT> ";
    out += "<complist>";
    for (const auto& comp : screen.components) {
      const auto& entry = catalog.lookup(comp.kind);
      const std::string open = "<" + comp.kind + ">";
      out += " " + open;
      if (comp.args.empty()) continue;
      std::vector<std::string> schema;
      for (const auto& a : entry.args) schema.push_back(a.name);
      emit_values(out, comp.args, schema);
      out += " " + closer(open);
    }
    out += " </complist> <code>";
    for (const auto& block : screen.code) {
      const auto open = event_token(block.event, catalog);
      out += " " + open;
      for (const auto& action : block.actions) {
        const auto tag = action_token(action, catalog);
        out += " " + tag;
        if (action.values.empty()) continue;
        const auto& spec =
            *catalog.lookup(action.target.kind).find_action(action.action);
        std::vector<std::string> schema;
        for (const auto& p : spec.params) schema.push_back(p.name);
        emit_values(out, action.values, schema);
        out += " " + closer(tag);
      }
      out += " " + closer(open);
    }
    out += " </code>";
  }
  return out;
}

void check_valid(const SarApp& app, const Catalog& catalog) {
  auto diagnostics = validate(app, catalog);
  if (!diagnostics.empty()) throw InvariantViolation(std::move(diagnostics));
}

}  // namespace sar
