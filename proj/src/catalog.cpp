#include "sar/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "embedded.hpp"
#include "json.hpp"
#include "sar/errors.hpp"

namespace sar {

namespace {

using nlohmann::json;

constexpr std::string_view kInstanceHole = "{instance}";

void replace_all(std::string& text, std::string_view from,
                 std::string_view to) {
  for (std::size_t pos = text.find(from); pos != std::string::npos;
       pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
}

ArgType parse_arg_type(const std::string& text) {
  if (text == "string") return ArgType::kString;
  if (text == "number") return ArgType::kNumber;
  if (text == "color") return ArgType::kColor;
  throw ConfigError("catalog: unknown argument type '" + text + "'");
}

ValueKind parse_value_kind(const std::string& text) {
  if (text == "string") return ValueKind::kString;
  if (text == "number") return ValueKind::kNumber;
  if (text == "color") return ValueKind::kColor;
  if (text == "property") return ValueKind::kProperty;
  throw ConfigError("catalog: unknown value kind '" + text + "'");
}

StringPairs parse_pairs(const json& object) {
  StringPairs out;
  for (auto it = object.begin(); it != object.end(); ++it) {
    out.emplace_back(it.key(), it.value().get<std::string>());
  }
  return out;
}

std::vector<std::string> string_list(const json& node, const char* key) {
  std::vector<std::string> out;
  if (node.contains(key)) {
    for (const auto& item : node.at(key)) out.push_back(item.get<std::string>());
  }
  return out;
}

ActionSpec parse_action(const json& node) {
  ActionSpec action;
  action.name = node.at("name").get<std::string>();
  action.token = node.at("token").get<std::string>();
  action.aliases = string_list(node, "aliases");
  const auto block = node.at("block").get<std::string>();
  if (block == "method") {
    action.block = BlockKind::kMethod;
  } else if (block == "setter") {
    action.block = BlockKind::kSetter;
  } else {
    throw ConfigError("catalog: unknown block kind '" + block + "'");
  }
  action.member = node.at("member").get<std::string>();
  for (const auto& p : node.value("params", json::array())) {
    ParamSpec param;
    param.name = p.at("name").get<std::string>();
    param.socket = p.at("socket").get<std::string>();
    for (const auto& a : p.at("accepts")) {
      param.accepts.push_back(parse_value_kind(a.get<std::string>()));
    }
    action.params.push_back(std::move(param));
  }
  for (const auto& c : node.value("constants", json::array())) {
    action.constants.push_back({c.at("socket").get<std::string>(),
                                c.at("block").get<std::string>(),
                                c.at("value").get<std::string>()});
  }
  const auto& effect = node.at("effect");
  action.effect.name = effect.at("name").get<std::string>();
  action.effect.component = effect.value("component", false);
  action.effect.value_param = effect.value("value", std::string());
  if (node.contains("sets")) action.sets = parse_pairs(node.at("sets"));
  action.increments = node.value("increments", std::string());
  return action;
}

CatalogEntry parse_entry(const json& node) {
  CatalogEntry entry;
  entry.kind = node.at("kind").get<std::string>();
  entry.type = node.at("type").get<std::string>();
  entry.version = node.at("version").get<std::string>();
  entry.visible = node.value("visible", true);
  entry.singleton = node.value("singleton", false);
  if (node.contains("container")) {
    const auto& c = node.at("container");
    entry.container = ContainerSpec{
        c.at("type").get<std::string>(), c.at("version").get<std::string>(),
        parse_pairs(c.value("properties", json::object()))};
  }
  for (const auto& a : node.value("args", json::array())) {
    ArgSpec arg;
    arg.name = a.at("name").get<std::string>();
    arg.type = parse_arg_type(a.at("type").get<std::string>());
    arg.default_value = a.value("default", std::string());
    arg.property = a.at("property").get<std::string>();
    arg.emit_default = a.value("emit_default", false);
    arg.asset = a.value("asset", false);
    entry.args.push_back(std::move(arg));
  }
  entry.state = parse_pairs(node.value("state", json::object()));
  for (const auto& e : node.value("events", json::array())) {
    EventSpec event;
    event.name = e.at("name").get<std::string>();
    event.token = e.at("token").get<std::string>();
    event.aliases = string_list(e, "aliases");
    event.block_event = e.at("block_event").get<std::string>();
    event.toggles = e.value("toggles", std::string());
    entry.events.push_back(std::move(event));
  }
  for (const auto& a : node.value("actions", json::array())) {
    entry.actions.push_back(parse_action(a));
  }
  for (const auto& p : node.value("properties", json::array())) {
    entry.properties.push_back(
        {p.at("name").get<std::string>(), p.at("member").get<std::string>()});
  }
  return entry;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_';
  });
}

// Rejects manifests whose tags would be ambiguous to the parser.
void check_catalog(const std::vector<CatalogEntry>& entries,
                   const std::vector<std::string>& arg_names) {
  std::set<std::string> reserved = {"complist", "code", "NEXT"};
  std::set<std::string> kinds;
  for (const auto& e : entries) {
    if (!is_identifier(e.kind)) {
      throw ConfigError("catalog: bad kind name '" + e.kind + "'");
    }
    if (std::isdigit(static_cast<unsigned char>(e.kind.back()))) {
      throw ConfigError("catalog: kind '" + e.kind + "' ends in a digit");
    }
    if (!kinds.insert(e.kind).second || reserved.count(e.kind)) {
      throw ConfigError("catalog: duplicate or reserved kind '" + e.kind + "'");
    }
    for (const auto& a : e.actions) {
      if (a.bare_token() && !e.singleton) {
        throw ConfigError("catalog: bare action token '" + a.token +
                          "' on non-singleton kind '" + e.kind + "'");
      }
      for (const auto& [key, source] : a.sets) {
        if (!source.empty() && source[0] != '=' && !a.find_param(source)) {
          throw ConfigError("catalog: action '" + e.kind + "." + a.name +
                            "' sets '" + key + "' from unknown parameter");
        }
      }
    }
  }
  for (const auto& name : arg_names) {
    if (kinds.count(name) || reserved.count(name)) {
      throw ConfigError("catalog: argument name '" + name +
                        "' collides with a component or structural tag");
    }
    for (const auto& e : entries) {
      for (const auto& a : e.actions) {
        if (a.bare_token() && a.token == name) {
          throw ConfigError("catalog: argument name '" + name +
                            "' collides with an action token");
        }
      }
    }
  }
}

}  // namespace

std::string ArgSpec::default_for(std::string_view instance_name) const {
  std::string out = default_value;
  replace_all(out, kInstanceHole, instance_name);
  return out;
}

bool ParamSpec::accepts_kind(ValueKind kind) const {
  return std::find(accepts.begin(), accepts.end(), kind) != accepts.end();
}

bool ActionSpec::bare_token() const {
  return token.find('{') == std::string::npos;
}

const ParamSpec* ActionSpec::find_param(std::string_view param) const {
  for (const auto& p : params) {
    if (p.name == param) return &p;
  }
  return nullptr;
}

const ArgSpec* CatalogEntry::find_arg(std::string_view name) const {
  for (const auto& a : args) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const EventSpec* CatalogEntry::find_event(std::string_view name) const {
  for (const auto& e : events) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const ActionSpec* CatalogEntry::find_action(std::string_view name) const {
  for (const auto& a : actions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const PropertySpec* CatalogEntry::find_property(std::string_view name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string CatalogEntry::instance_name(int index) const {
  return type + std::to_string(index);
}

std::string render_pattern(std::string_view pattern, std::string_view kind,
                           int index) {
  std::string out(pattern);
  const std::string n = std::to_string(index);
  replace_all(out, "{inst}", std::string(kind) + n);
  replace_all(out, "{kind}", kind);
  replace_all(out, "{n}", n);
  return out;
}

std::optional<int> match_pattern(std::string_view pattern,
                                 std::string_view kind, std::string_view tag) {
  std::optional<int> index;
  std::size_t p = 0;
  std::size_t t = 0;
  auto read_index = [&]() -> bool {
    std::size_t start = t;
    while (t < tag.size() && std::isdigit(static_cast<unsigned char>(tag[t]))) {
      ++t;
    }
    if (t == start || tag[start] == '0' || t - start > 6) return false;
    index = std::stoi(std::string(tag.substr(start, t - start)));
    return true;
  };
  while (p < pattern.size()) {
    if (pattern.compare(p, 6, "{inst}") == 0) {
      if (tag.compare(t, kind.size(), kind) != 0) return std::nullopt;
      t += kind.size();
      if (!read_index()) return std::nullopt;
      p += 6;
    } else if (pattern.compare(p, 6, "{kind}") == 0) {
      if (tag.compare(t, kind.size(), kind) != 0) return std::nullopt;
      t += kind.size();
      p += 6;
    } else if (pattern.compare(p, 3, "{n}") == 0) {
      if (!read_index()) return std::nullopt;
      p += 3;
    } else {
      if (t >= tag.size() || tag[t] != pattern[p]) return std::nullopt;
      ++t;
      ++p;
    }
  }
  if (t != tag.size()) return std::nullopt;
  return index.value_or(1);
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_json(data::kCatalogJson);
  return catalog;
}

Catalog Catalog::from_json(std::string_view text) {
  Catalog catalog;
  try {
    const json root = json::parse(text);
    catalog.ya_version_ = root.at("ya_version").get<std::string>();
    catalog.language_version_ = root.at("language_version").get<std::string>();
    catalog.auth_url_ = root.at("auth_url").get<std::string>();
    catalog.form_type_ = root.at("form").at("type").get<std::string>();
    catalog.form_version_ = root.at("form").at("version").get<std::string>();
    for (const auto& c : root.value("colors", json::array())) {
      catalog.colors_.push_back(
          {c.at("name").get<std::string>(), c.at("block").get<std::string>(),
           c.at("hex").get<std::string>(), c.at("argb").get<std::string>()});
    }
    for (const auto& node : root.at("components")) {
      catalog.entries_.push_back(parse_entry(node));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("catalog: ") + e.what());
  }
  std::set<std::string> names;
  for (const auto& e : catalog.entries_) {
    for (const auto& a : e.args) names.insert(a.name);
    for (const auto& action : e.actions) {
      for (const auto& p : action.params) names.insert(p.name);
    }
  }
  catalog.arg_names_.assign(names.begin(), names.end());
  check_catalog(catalog.entries_, catalog.arg_names_);
  return catalog;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

const CatalogEntry* Catalog::find(std::string_view kind) const {
  for (const auto& e : entries_) {
    if (e.kind == kind) return &e;
  }
  return nullptr;
}

const CatalogEntry& Catalog::lookup(std::string_view kind) const {
  if (const auto* entry = find(kind)) return *entry;
  throw NotFound("component kind '" + std::string(kind) + "'");
}

std::vector<DefaultArg> Catalog::default_args(std::string_view kind,
                                              int index) const {
  const auto& entry = lookup(kind);
  std::vector<DefaultArg> out;
  const auto instance = entry.instance_name(index);
  for (const auto& arg : entry.args) {
    out.push_back({arg.name, arg.default_for(instance)});
  }
  return out;
}

const ColorSpec* Catalog::find_color(std::string_view name) const {
  for (const auto& c : colors_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Catalog::is_arg_name(std::string_view name) const {
  return std::binary_search(arg_names_.begin(), arg_names_.end(), name);
}

}  // namespace sar
