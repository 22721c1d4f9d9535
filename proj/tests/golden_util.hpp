#pragma once

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace sar::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// JSON body of a .scm file with every component Uuid masked.
inline nlohmann::json scm_body(const std::string& scm) {
  const std::string head = "#|\n$JSON\n";
  const std::string tail = "\n|#";
  auto begin = scm.find(head);
  auto end = scm.rfind(tail);
  if (begin != 0 || end == std::string::npos) return nullptr;
  auto body = nlohmann::json::parse(scm.substr(head.size(), end - head.size()));
  std::function<void(nlohmann::json&)> mask = [&](nlohmann::json& node) {
    if (node.is_object()) {
      if (node.contains("$Type") && node.contains("Uuid") &&
          node["$Type"] != "Form") {
        node["Uuid"] = "<uuid>";
      }
      for (auto& [k, v] : node.items()) mask(v);
    } else if (node.is_array()) {
      for (auto& v : node) mask(v);
    }
  };
  mask(body);
  return body;
}

// Blockly XML as a tree with whitespace trimmed and block ids masked.
inline boost::property_tree::ptree bky_tree(const std::string& xml) {
  namespace pt = boost::property_tree;
  std::istringstream in(xml);
  pt::ptree tree;
  pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  std::function<void(pt::ptree&)> mask = [&](pt::ptree& node) {
    for (auto& [key, child] : node) {
      if (key == "<xmlattr>") {
        if (child.count("id")) child.put("id", "<id>");
      } else {
        mask(child);
      }
    }
  };
  mask(tree);
  return tree;
}

}  // namespace sar::testing
