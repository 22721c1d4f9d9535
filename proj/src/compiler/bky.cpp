#include "sar/compiler.hpp"

namespace sar {

namespace {

constexpr std::string_view kAlphabet =
    "!#$%()*+,-./:;=?@[]^_`{|}~"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
constexpr std::size_t kIdLength = 20;
constexpr int kEventX = -184;
constexpr int kEventY = 91;
constexpr int kEventSpacing = 160;

std::string escape(std::string_view text, bool attribute) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out += c;
    }
  }
  return out;
}

void write(std::string& out, const XmlNode& node, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent + "<" + node.name;
  for (const auto& [key, value] : node.attributes) {
    out += " " + key + "=\"" + escape(value, true) + "\"";
  }
  out += ">";
  if (node.children.empty()) {
    out += escape(node.text, false) + "</" + node.name + ">\n";
    return;
  }
  out += "\n";
  for (const auto& child : node.children) write(out, child, depth + 1);
  out += indent + "</" + node.name + ">\n";
}

XmlNode field(std::string name, std::string text) {
  return {"field", {{"name", std::move(name)}}, std::move(text), {}};
}

class BlockWriter {
 public:
  BlockWriter(const Screen& screen, const LiteralDict& dict, Rng& rng,
              const Catalog& catalog)
      : screen_(screen), dict_(dict), rng_(rng), catalog_(catalog) {}

  XmlNode document() {
    XmlNode root{"xml", {{"xmlns", "http://www.w3.org/1999/xhtml"}}, "", {}};
    for (std::size_t i = 0; i < screen_.code.size(); ++i) {
      root.children.push_back(event(screen_.code[i], static_cast<int>(i)));
    }
    root.children.push_back({"yacodeblocks",
                             {{"ya-version", catalog_.ya_version()},
                              {"language-version", catalog_.language_version()}},
                             "",
                             {}});
    return root;
  }

 private:
  std::string id() {
    std::string out;
    for (std::size_t i = 0; i < kIdLength; ++i) {
      out += kAlphabet[rng_.below(kAlphabet.size())];
    }
    return out;
  }

  std::string instance(const ComponentRef& ref) const {
    return catalog_.lookup(ref.kind).instance_name(ref.index);
  }

  XmlNode block(std::string type) {
    return {"block", {{"type", std::move(type)}, {"id", id()}}, "", {}};
  }

  XmlNode event(const EventBlock& handler, int position) {
    const auto& entry = catalog_.lookup(handler.event.component.kind);
    const auto& spec = *entry.find_event(handler.event.event);
    const auto name = instance(handler.event.component);
    XmlNode node = block("component_event");
    node.attributes.emplace_back("x", std::to_string(kEventX));
    node.attributes.emplace_back(
        "y", std::to_string(kEventY + kEventSpacing * position));
    node.children.push_back({"mutation",
                             {{"component_type", entry.type},
                              {"is_generic", "false"},
                              {"instance_name", name},
                              {"event_name", spec.block_event}},
                             "",
                             {}});
    node.children.push_back(field("COMPONENT_SELECTOR", name));
    XmlNode statement{"statement", {{"name", "DO"}}, "", {}};
    statement.children.push_back(chain(handler.actions, 0));
    node.children.push_back(std::move(statement));
    return node;
  }

  // Action i with the rest of the list hanging off its <next>.
  XmlNode chain(const std::vector<ActionInst>& actions, std::size_t i) {
    XmlNode node = action(actions[i]);
    if (i + 1 < actions.size()) {
      XmlNode next{"next", {}, "", {}};
      next.children.push_back(chain(actions, i + 1));
      node.children.push_back(std::move(next));
    }
    return node;
  }

  XmlNode action(const ActionInst& action) {
    const auto& entry = catalog_.lookup(action.target.kind);
    const auto& spec = *entry.find_action(action.action);
    const auto name = instance(action.target);
    XmlNode node;
    if (spec.block == BlockKind::kMethod) {
      node = block("component_method");
      node.children.push_back({"mutation",
                               {{"component_type", entry.type},
                                {"method_name", spec.member},
                                {"is_generic", "false"},
                                {"instance_name", name}},
                               "",
                               {}});
      node.children.push_back(field("COMPONENT_SELECTOR", name));
    } else {
      node = block("component_set_get");
      node.children.push_back({"mutation",
                               {{"component_type", entry.type},
                                {"set_or_get", "set"},
                                {"property_name", spec.member},
                                {"is_generic", "false"},
                                {"instance_name", name}},
                               "",
                               {}});
      node.children.push_back(field("COMPONENT_SELECTOR", name));
      node.children.push_back(field("PROP", spec.member));
    }
    for (const auto& param : spec.params) {
      for (const auto& v : action.values) {
        if (v.name != param.name) continue;
        XmlNode socket{"value", {{"name", param.socket}}, "", {}};
        socket.children.push_back(value(param, v.value));
        node.children.push_back(std::move(socket));
      }
    }
    for (const auto& constant : spec.constants) {
      XmlNode socket{"value", {{"name", constant.socket}}, "", {}};
      XmlNode literal = block(constant.block);
      literal.children.push_back(field("NUM", constant.value));
      socket.children.push_back(std::move(literal));
      node.children.push_back(std::move(socket));
    }
    return node;
  }

  XmlNode value(const ParamSpec& param, const ValueRef& value) {
    if (const auto* prop = std::get_if<PropertyRef>(&value)) {
      const auto& entry = catalog_.lookup(prop->component.kind);
      const auto& member = entry.find_property(prop->property)->member;
      const auto name = instance(prop->component);
      XmlNode node = block("component_set_get");
      node.children.push_back({"mutation",
                               {{"component_type", entry.type},
                                {"set_or_get", "get"},
                                {"property_name", member},
                                {"is_generic", "false"},
                                {"instance_name", name}},
                               "",
                               {}});
      node.children.push_back(field("COMPONENT_SELECTOR", name));
      node.children.push_back(field("PROP", member));
      return node;
    }
    const auto& placeholder = std::get<LiteralRef>(value).placeholder;
    const auto& raw = dict_.at(placeholder);
    if (placeholder_family(placeholder) == LiteralFamily::kNumber) {
      XmlNode node = block("math_number");
      node.children.push_back(field("NUM", raw));
      return node;
    }
    if (param.accepts_kind(ValueKind::kColor) &&
        !param.accepts_kind(ValueKind::kString)) {
      const auto* color = catalog_.find_color(raw);
      if (color == nullptr) {
        throw Error("UNKNOWN_COLOR", "no color named '" + raw + "'");
      }
      XmlNode node = block(color->block);
      node.children.push_back(field("COLOR", color->hex));
      return node;
    }
    XmlNode node = block("text");
    node.children.push_back(field("TEXT", raw));
    return node;
  }

  const Screen& screen_;
  const LiteralDict& dict_;
  Rng& rng_;
  const Catalog& catalog_;
};

}  // namespace

std::string XmlNode::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return v;
  }
  return {};
}

const XmlNode* XmlNode::child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::string to_xml(const XmlNode& node) {
  std::string out;
  write(out, node, 0);
  return out;
}

std::string_view block_id_alphabet() { return kAlphabet; }

BkyDocument emit_bky(const Screen& screen, const LiteralDict& dict, Rng& rng,
                     const Catalog& catalog) {
  return {BlockWriter(screen, dict, rng, catalog).document()};
}

}  // namespace sar
