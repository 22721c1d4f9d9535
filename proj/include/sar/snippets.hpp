#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sar/catalog.hpp"

namespace sar {

struct ArgPhrases {
  std::string arg;
  std::vector<std::string> phrases;  // contain "{value}"
};

struct ComponentPhrases {
  std::vector<std::string> nouns;
  std::vector<ArgPhrases> args;
  // Extra ways to name the component as an event subject ("the phone").
  std::vector<std::string> event_subjects;

  const ArgPhrases* find_arg(std::string_view arg) const;
};

// Phrase templates for one event, action or property, keyed "kind.name".
struct PhraseSet {
  std::string kind;
  std::string name;
  std::vector<std::string> phrases;
};

// NL phrase tables shared by the synthesizer and the rule-based frontend.
class Snippets {
 public:
  static const Snippets& builtin();
  // Throws ConfigError when a table is empty or a catalog capability has
  // no phrasing.
  static Snippets from_json(std::string_view text,
                            const Catalog& catalog = Catalog::builtin());

  const std::vector<std::string>& intros() const { return intros_; }
  const std::vector<std::string>& event_markers() const {
    return event_markers_;
  }
  const std::vector<std::string>& ordinals() const { return ordinals_; }
  const std::vector<std::pair<std::string, int>>& quantities() const {
    return quantities_;
  }
  const std::vector<std::string>& function_words() const {
    return function_words_;
  }
  const std::vector<std::string>& action_joins() const { return action_joins_; }

  const ComponentPhrases& component(std::string_view kind) const;
  const std::vector<PhraseSet>& events() const { return events_; }
  const std::vector<PhraseSet>& actions() const { return actions_; }
  const std::vector<PhraseSet>& properties() const { return properties_; }
  const PhraseSet* find_event(std::string_view kind,
                              std::string_view name) const;
  const PhraseSet* find_action(std::string_view kind,
                               std::string_view name) const;
  const PhraseSet* find_property(std::string_view kind,
                                 std::string_view name) const;

  // Sample literal values keyed "kind.arg" or "kind.action.param".
  const std::vector<std::string>* literal_values(std::string_view key) const;

  // Lowercase words that can follow a quantity ("2 buttons"): every noun
  // word except function words, plus plural forms of noun heads.
  const std::vector<std::string>& component_words() const {
    return component_words_;
  }

 private:
  std::vector<std::string> intros_;
  std::vector<std::string> event_markers_;
  std::vector<std::string> ordinals_;
  std::vector<std::pair<std::string, int>> quantities_;
  std::vector<std::string> function_words_;
  std::vector<std::string> action_joins_;
  std::map<std::string, ComponentPhrases, std::less<>> components_;
  std::vector<PhraseSet> events_;
  std::vector<PhraseSet> actions_;
  std::vector<PhraseSet> properties_;
  std::map<std::string, std::vector<std::string>, std::less<>> literal_values_;
  std::vector<std::string> component_words_;
};

// Synonym classes for mutation. A word belongs to the first class that
// lists it.
class Lexicon {
 public:
  struct WordClass {
    std::string name;
    std::vector<std::string> words;
  };

  static const Lexicon& builtin();
  static Lexicon from_json(std::string_view text);

  const std::vector<WordClass>& classes() const { return classes_; }
  // Class index of a lowercase word.
  std::optional<std::size_t> class_of(std::string_view word) const;

 private:
  std::vector<WordClass> classes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// "buttons" for "button", "boxes" for "box".
std::string plural(std::string_view noun);

}  // namespace sar
