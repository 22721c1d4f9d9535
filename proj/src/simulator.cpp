#include "sar/simulator.hpp"

#include <cctype>
#include <sstream>

namespace sar {

namespace {

std::string quoted(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string ref_name(const ComponentRef& ref) {
  return ref.kind + std::to_string(ref.index);
}

std::optional<ComponentRef> component_from_name(std::string_view name,
                                                const Catalog& catalog) {
  for (const auto& entry : catalog.entries()) {
    if (auto index = match_pattern("{inst}", entry.kind, name)) {
      return ComponentRef{entry.kind, *index};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string Effect::text() const {
  std::vector<std::string> parts;
  if (!component.empty()) parts.push_back(component);
  if (value) parts.push_back(quoted(*value));
  if (parts.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out + ")";
}

AppState AppState::init(const SarApp& app, const LiteralDict& dict,
                        const Catalog& catalog) {
  check_valid(app, catalog);
  AppState state;
  state.program_ = std::make_shared<const Program>(
      Program{app.screens.front(), dict, &catalog});
  for (const auto& comp : app.screens.front().components) {
    const auto& entry = catalog.lookup(comp.kind);
    auto& slots = state.state_[comp.ref()];
    for (const auto& arg : entry.args) {
      slots[arg.name] = arg.default_for(entry.instance_name(comp.index));
    }
    for (const auto& arg : comp.args) {
      slots[arg.name] = dict.at(std::get<LiteralRef>(arg.value).placeholder);
    }
    for (const auto& [key, value] : entry.state) slots[key] = value;
  }
  return state;
}

const std::string& AppState::get(const ComponentRef& component,
                                 std::string_view key) const {
  auto it = state_.find(component);
  if (it == state_.end()) throw NotFound("component " + ref_name(component));
  auto slot = it->second.find(std::string(key));
  if (slot == it->second.end()) {
    throw NotFound("state '" + std::string(key) + "' on " + ref_name(component));
  }
  return slot->second;
}

void AppState::set(const ComponentRef& component, std::string_view key,
                   std::string value) {
  auto it = state_.find(component);
  if (it == state_.end()) throw NotFound("component " + ref_name(component));
  auto slot = it->second.find(std::string(key));
  if (slot == it->second.end()) {
    throw NotFound("state '" + std::string(key) + "' on " + ref_name(component));
  }
  slot->second = std::move(value);
}

bool AppState::handles(const EventRef& event) const {
  for (const auto& block : program_->screen.code) {
    if (block.event == event) return true;
  }
  return false;
}

std::string AppState::resolve(const ValueRef& value) const {
  if (const auto* prop = std::get_if<PropertyRef>(&value)) {
    return get(prop->component, prop->property);
  }
  return program_->dict.at(std::get<LiteralRef>(value).placeholder);
}

void AppState::run(const ActionInst& action) {
  const auto& catalog = *program_->catalog;
  const auto& entry = catalog.lookup(action.target.kind);
  const auto& spec = *entry.find_action(action.action);
  std::map<std::string, std::string> values;
  for (const auto& v : action.values) values[v.name] = resolve(v.value);

  trace_.push_back({entry.instance_name(action.target.index),
                    spec.block == BlockKind::kSetter ? "set:" + spec.member
                                                     : spec.member});
  auto& slots = state_.at(action.target);
  for (const auto& [key, source] : spec.sets) {
    slots[key] = source[0] == '=' ? source.substr(1) : values.at(source);
  }
  if (!spec.increments.empty()) {
    auto& counter = slots[spec.increments];
    counter = std::to_string(std::stoll(counter.empty() ? "0" : counter) + 1);
  }
  Effect effect{spec.effect.name, {}, std::nullopt};
  if (spec.effect.component) effect.component = ref_name(action.target);
  if (!spec.effect.value_param.empty()) {
    effect.value = values.at(spec.effect.value_param);
  }
  effects_.push_back(std::move(effect));
}

void AppState::fire(const EventRef& event) {
  auto it = state_.find(event.component);
  if (it == state_.end()) return;
  const auto& entry = program_->catalog->lookup(event.component.kind);
  const auto* spec = entry.find_event(event.event);
  if (spec == nullptr) return;
  if (!spec->toggles.empty()) {
    auto& flag = it->second[spec->toggles];
    flag = flag == "true" ? "false" : "true";
  }
  for (const auto& block : program_->screen.code) {
    if (block.event != event) continue;
    for (const auto& action : block.actions) run(action);
  }
}

AppState fire(AppState state, const EventRef& event,
              const std::vector<Input>& inputs) {
  for (const auto& input : inputs) {
    state.set(input.component, input.key, input.value);
  }
  state.fire(event);
  return state;
}

std::optional<EventRef> event_from_token(std::string_view token,
                                         const Catalog& catalog) {
  if (token.size() > 2 && token.front() == '<' && token.back() == '>') {
    token = token.substr(1, token.size() - 2);
  }
  for (const auto& entry : catalog.entries()) {
    for (const auto& event : entry.events) {
      auto patterns = event.aliases;
      patterns.insert(patterns.begin(), event.token);
      for (const auto& p : patterns) {
        if (auto index = match_pattern(p, entry.kind, token)) {
          return EventRef{{entry.kind, *index}, event.name};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> run_script(AppState& state, std::string_view script,
                                    const Catalog& catalog) {
  std::istringstream in{std::string(script)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream words(line);
    std::string verb;
    if (!(words >> verb) || verb[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw ConfigError("script line " + std::to_string(line_no) + ": " + why);
    };
    if (verb == "fire") {
      std::string token;
      words >> token;
      auto event = event_from_token(token, catalog);
      if (!event) fail("unknown event '" + token + "'");
      state.fire(*event);
    } else if (verb == "set") {
      std::string name;
      std::string key;
      if (!(words >> name >> key)) fail("expected: set <component> <key> <value>");
      auto ref = component_from_name(name, catalog);
      if (!ref) fail("unknown component '" + name + "'");
      std::string value;
      std::getline(words >> std::ws, value);
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        value = value.substr(1, value.size() - 2);
      }
      try {
        state.set(*ref, key, value);
      } catch (const NotFound& e) {
        fail(e.what());
      }
    } else {
      fail("unknown command '" + verb + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& e : state.effects()) out.push_back(e.text());
  return out;
}

}  // namespace sar
