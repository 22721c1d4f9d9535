#include "sar/snippets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "embedded.hpp"
#include "json.hpp"
#include "sar/errors.hpp"

namespace sar {

namespace {

using nlohmann::json;

std::vector<std::string> strings(const json& node) {
  std::vector<std::string> out;
  for (const auto& item : node) out.push_back(item.get<std::string>());
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw ConfigError("snippets: " + what);
}

std::vector<PhraseSet> phrase_sets(const json& node, const char* key) {
  std::vector<PhraseSet> out;
  for (const auto& item : node) {
    const auto id = item.at(key).get<std::string>();
    const auto dot = id.find('.');
    require(dot != std::string::npos, "bad " + std::string(key) + " id " + id);
    out.push_back({id.substr(0, dot), id.substr(dot + 1),
                   strings(item.at("phrases"))});
    require(!out.back().phrases.empty(), "no phrases for " + id);
  }
  return out;
}

const PhraseSet* find_set(const std::vector<PhraseSet>& sets,
                          std::string_view kind, std::string_view name) {
  for (const auto& s : sets) {
    if (s.kind == kind && s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

const ArgPhrases* ComponentPhrases::find_arg(std::string_view arg) const {
  for (const auto& a : args) {
    if (a.arg == arg) return &a;
  }
  return nullptr;
}

std::string plural(std::string_view noun) {
  std::string out(noun);
  if (out.ends_with("s") || out.ends_with("x") || out.ends_with("ch") ||
      out.ends_with("sh")) {
    return out + "es";
  }
  return out + "s";
}

const Snippets& Snippets::builtin() {
  static const Snippets snippets = from_json(data::kSnippetsJson);
  return snippets;
}

Snippets Snippets::from_json(std::string_view text, const Catalog& catalog) {
  Snippets s;
  try {
    const json root = json::parse(text);
    const auto& intro = root.at("intros");
    for (const auto& verb : intro.at("verbs")) {
      for (const auto& object : intro.at("objects")) {
        for (const auto& link : intro.at("links")) {
          s.intros_.push_back(verb.get<std::string>() + " " +
                              object.get<std::string>() + " " +
                              link.get<std::string>());
        }
      }
    }
    s.event_markers_ = strings(root.at("event_markers"));
    s.ordinals_ = strings(root.at("ordinals"));
    for (auto it = root.at("quantities").begin();
         it != root.at("quantities").end(); ++it) {
      s.quantities_.emplace_back(it.key(), it.value().get<int>());
    }
    s.function_words_ = strings(root.at("function_words"));
    s.action_joins_ = strings(root.at("action_joins"));
    const auto& comps = root.at("components");
    for (auto it = comps.begin(); it != comps.end(); ++it) {
      ComponentPhrases phrases;
      phrases.nouns = strings(it.value().at("nouns"));
      const auto& args = it.value().value("args", json::object());
      for (auto a = args.begin(); a != args.end(); ++a) {
        phrases.args.push_back({a.key(), strings(a.value())});
      }
      phrases.event_subjects =
          strings(it.value().value("event_subjects", json::array()));
      s.components_.emplace(it.key(), std::move(phrases));
    }
    s.events_ = phrase_sets(root.at("events"), "event");
    s.actions_ = phrase_sets(root.at("actions"), "action");
    s.properties_ = phrase_sets(root.at("properties"), "property");
    const auto& values = root.at("literal_values");
    for (auto it = values.begin(); it != values.end(); ++it) {
      s.literal_values_.emplace(it.key(), strings(it.value()));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("snippets: ") + e.what());
  }

  require(!s.intros_.empty(), "intros are empty");
  require(!s.event_markers_.empty(), "event markers are empty");
  require(!s.action_joins_.empty(), "action joins are empty");
  for (const auto& entry : catalog.entries()) {
    auto it = s.components_.find(entry.kind);
    require(it != s.components_.end() && !it->second.nouns.empty(),
            "no nouns for " + entry.kind);
    for (const auto& arg : entry.args) {
      const auto* phrases = it->second.find_arg(arg.name);
      require(phrases != nullptr && !phrases->phrases.empty(),
              "no phrases for " + entry.kind + "." + arg.name);
      require(s.literal_values(entry.kind + "." + arg.name) != nullptr,
              "no literal values for " + entry.kind + "." + arg.name);
    }
    for (const auto& event : entry.events) {
      require(s.find_event(entry.kind, event.name) != nullptr,
              "no phrases for event " + entry.kind + "." + event.name);
    }
    for (const auto& action : entry.actions) {
      require(s.find_action(entry.kind, action.name) != nullptr,
              "no phrases for action " + entry.kind + "." + action.name);
      for (const auto& p : action.params) {
        const auto key = entry.kind + "." + action.name + "." + p.name;
        require(s.literal_values(key) != nullptr, "no literal values for " + key);
      }
    }
    for (const auto& property : entry.properties) {
      require(s.find_property(entry.kind, property.name) != nullptr,
              "no phrases for property " + entry.kind + "." + property.name);
    }
  }

  std::set<std::string> function(s.function_words_.begin(),
                                 s.function_words_.end());
  std::set<std::string> words;
  for (const auto& [kind, phrases] : s.components_) {
    for (const auto& noun : phrases.nouns) {
      auto parts = split_words(noun);
      for (const auto& w : parts) {
        if (!function.count(w)) words.insert(w);
      }
      words.insert(plural(parts.back()));
    }
  }
  s.component_words_.assign(words.begin(), words.end());
  return s;
}

const ComponentPhrases& Snippets::component(std::string_view kind) const {
  auto it = components_.find(kind);
  if (it == components_.end()) {
    throw NotFound("snippets for component '" + std::string(kind) + "'");
  }
  return it->second;
}

const PhraseSet* Snippets::find_event(std::string_view kind,
                                      std::string_view name) const {
  return find_set(events_, kind, name);
}

const PhraseSet* Snippets::find_action(std::string_view kind,
                                       std::string_view name) const {
  return find_set(actions_, kind, name);
}

const PhraseSet* Snippets::find_property(std::string_view kind,
                                         std::string_view name) const {
  return find_set(properties_, kind, name);
}

const std::vector<std::string>* Snippets::literal_values(
    std::string_view key) const {
  auto it = literal_values_.find(key);
  return it == literal_values_.end() ? nullptr : &it->second;
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lexicon = from_json(data::kLexiconJson);
  return lexicon;
}

Lexicon Lexicon::from_json(std::string_view text) {
  Lexicon lexicon;
  try {
    // Class order matters, so keep the document order.
    const auto root = nlohmann::ordered_json::parse(text);
    const auto& classes = root.at("classes");
    for (auto it = classes.begin(); it != classes.end(); ++it) {
      WordClass wc{it.key(), {}};
      for (const auto& w : it.value()) wc.words.push_back(w.get<std::string>());
      if (wc.words.size() < 2) {
        throw ConfigError("lexicon: class '" + wc.name + "' needs two words");
      }
      lexicon.classes_.push_back(std::move(wc));
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ConfigError(std::string("lexicon: ") + e.what());
  }
  for (std::size_t i = 0; i < lexicon.classes_.size(); ++i) {
    for (const auto& w : lexicon.classes_[i].words) {
      lexicon.index_.emplace(w, i);
    }
  }
  return lexicon;
}

std::optional<std::size_t> Lexicon::class_of(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sar
