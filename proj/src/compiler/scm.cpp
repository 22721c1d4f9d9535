#include <map>

#include "json.hpp"
#include "sar/compiler.hpp"

namespace sar {

namespace {

using Json = nlohmann::ordered_json;

Json component_json(const ScmComponent& c) {
  Json out = Json::object();
  out["$Name"] = c.name;
  out["$Type"] = c.type;
  out["$Version"] = c.version;
  for (const auto& [key, value] : c.properties) out[key] = value;
  out["Uuid"] = c.uuid;
  if (!c.children.empty()) {
    Json children = Json::array();
    for (const auto& child : c.children) children.push_back(component_json(child));
    out["$Components"] = std::move(children);
  }
  return out;
}

std::string random_uuid(Rng& rng) {
  return std::to_string(rng.between(100000000, 2147483647));
}

// Literal text of a component argument as the designer stores it.
std::string arg_value(const Catalog& catalog, const ArgSpec& spec,
                      const std::string& raw) {
  if (spec.type != ArgType::kColor) return raw;
  const auto* color = catalog.find_color(raw);
  if (color == nullptr) {
    throw Error("UNKNOWN_COLOR", "no color named '" + raw + "'");
  }
  return color->argb;
}

}  // namespace

std::string ScmDocument::text() const {
  Json props = Json::object();
  props["$Name"] = form_name;
  props["$Type"] = form_type;
  props["$Version"] = form_version;
  if (app_name) props["AppName"] = *app_name;
  props["Title"] = title;
  props["Uuid"] = uuid;
  if (!components.empty()) {
    Json list = Json::array();
    for (const auto& c : components) list.push_back(component_json(c));
    props["$Components"] = std::move(list);
  }
  Json root = Json::object();
  root["authURL"] = Json::array({auth_url});
  root["YaVersion"] = ya_version;
  root["Source"] = source;
  root["Properties"] = std::move(props);
  return "#|\n$JSON\n" + root.dump() + "\n|#";
}

ScmDocument emit_scm(const Screen& screen, int screen_number,
                     const LiteralDict& dict, std::string_view app_name,
                     Rng& rng, const Catalog& catalog,
                     const std::filesystem::path* assets_dir) {
  ScmDocument doc;
  doc.auth_url = catalog.auth_url();
  doc.ya_version = catalog.ya_version();
  doc.form_name = "Screen" + std::to_string(screen_number);
  doc.form_type = catalog.form_type();
  doc.form_version = catalog.form_version();
  if (screen_number == 1) doc.app_name = std::string(app_name);
  doc.title = doc.form_name;

  std::map<std::string, int> containers;
  for (const auto& comp : screen.components) {
    const auto& entry = catalog.lookup(comp.kind);
    ScmComponent out;
    out.name = entry.instance_name(comp.index);
    out.type = entry.type;
    out.version = entry.version;
    for (const auto& spec : entry.args) {
      const ArgBinding* bound = nullptr;
      for (const auto& a : comp.args) {
        if (a.name == spec.name) bound = &a;
      }
      if (bound != nullptr) {
        std::string raw =
            dict.at(std::get<LiteralRef>(bound->value).placeholder);
        if (spec.asset && assets_dir != nullptr && is_media_file(raw)) {
          raw = resolve_asset(raw, *assets_dir).filename().string();
        }
        out.properties.emplace_back(spec.property,
                                    arg_value(catalog, spec, raw));
      } else if (spec.emit_default) {
        out.properties.emplace_back(
            spec.property,
            arg_value(catalog, spec, spec.default_for(out.name)));
      }
    }
    if (entry.container) {
      ScmComponent box;
      box.name = entry.container->type +
                 std::to_string(++containers[entry.container->type]);
      box.type = entry.container->type;
      box.version = entry.container->version;
      box.properties = entry.container->properties;
      box.uuid = random_uuid(rng);
      out.uuid = random_uuid(rng);
      box.children.push_back(std::move(out));
      doc.components.push_back(std::move(box));
    } else {
      out.uuid = random_uuid(rng);
      doc.components.push_back(std::move(out));
    }
  }
  return doc;
}

}  // namespace sar
