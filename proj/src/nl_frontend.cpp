#include "sar/nl_frontend.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>

namespace sar {

namespace {

struct Word {
  std::string text;  // lowercase surface form
  std::string norm;  // "#class" for lexicon words, else text
};

using Words = std::span<const Word>;

std::vector<std::string> split_spaces(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string join(Words words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w.text;
  return out;
}

bool is_slot(std::string_view t) { return t.size() > 2 && t.front() == '{'; }

struct NounPattern {
  std::string kind;
  std::vector<std::string> words;  // normalized
  bool subject_only = false;       // "the phone" names the accelerometer
  bool plural = false;
};

struct Template {
  std::vector<std::string> words;  // normalized; slots kept as "{target}"
  std::vector<std::string> cues;   // non-slot, non-function words
  bool has(std::string_view slot) const {
    return std::find(words.begin(), words.end(), slot) != words.end();
  }
};

struct PhraseTable {
  const PhraseSet* set;
  std::vector<Template> templates;
};

class Translator {
 public:
  Translator(const Catalog& catalog, const Snippets& snippets,
             const Lexicon& lexicon)
      : catalog_(catalog), snippets_(snippets), lexicon_(lexicon) {
    for (const auto& w : snippets.function_words()) function_.insert(norm(w));
    for (std::size_t i = 0; i < snippets.ordinals().size(); ++i) {
      ordinals_[snippets.ordinals()[i]] = static_cast<int>(i) + 1;
    }
    for (const auto& [word, n] : snippets.quantities()) quantities_[word] = n;
    for (const auto& m : snippets.event_markers()) markers_.insert(norm(lower(m)));
    for (const auto& entry : catalog.entries()) {
      const auto& phrases = snippets.component(entry.kind);
      for (const auto& noun : phrases.nouns) add_noun(entry.kind, noun, false);
      for (const auto& noun : phrases.event_subjects) add_noun(entry.kind, noun, true);
      auto& cues = cues_[entry.kind];
      for (const auto& arg : phrases.args) {
        for (const auto& phrase : arg.phrases) {
          const auto words = split_spaces(phrase);
          const auto slot = std::find(words.begin(), words.end(), "{value}");
          if (slot != words.begin() && slot != words.end()) {
            cues.emplace(norm(*(slot - 1)), arg.arg);
          }
        }
      }
    }
    std::stable_sort(nouns_.begin(), nouns_.end(), [](const auto& a, const auto& b) {
      return a.words.size() > b.words.size();
    });
    events_ = tables(snippets.events());
    actions_ = tables(snippets.actions());
    properties_ = tables(snippets.properties());
  }

  NlResult run(std::string_view nl, const LiteralDict& known) {
    NlResult result;
    auto extraction = extract_literals(nl);
    result.dict = known;
    for (const auto& [name, value] : extraction.dict.entries()) result.dict.set(name, value);

    const auto sentences = split_sentences(tokenize(extraction.text));
    std::vector<const std::vector<Word>*> functional;
    for (const auto& sentence : sentences) {
      if (markers_.count(sentence.front().norm)) {
        functional.push_back(&sentence);
      } else if (!declare(sentence, result.report)) {
        result.report.unmatched.push_back(join(sentence));
      }
    }
    if (screen_.components.empty()) {
      throw NoComponentsFound(
          "no component is mentioned; the description looks abstract. Name "
          "concrete components such as a button, a label or a text box");
    }
    for (const auto* sentence : functional) behaviour(*sentence, result.report);

    result.app.screens.push_back(screen_);
    result.sar = serialize(result.app, catalog_);
    return result;
  }

 private:
  std::string norm(const std::string& word) const {
    const auto cls = lexicon_.class_of(word);
    return cls ? "#" + lexicon_.classes()[*cls].name : word;
  }

  void add_noun(const std::string& kind, const std::string& noun, bool subject) {
    auto words = split_spaces(noun);
    NounPattern singular{kind, {}, subject, false};
    for (const auto& w : words) singular.words.push_back(norm(w));
    nouns_.push_back(singular);
    words.back() = plural(words.back());
    NounPattern many{kind, {}, subject, true};
    for (const auto& w : words) many.words.push_back(norm(w));
    nouns_.push_back(std::move(many));
  }

  std::vector<PhraseTable> tables(const std::vector<PhraseSet>& sets) const {
    std::vector<PhraseTable> out;
    for (const auto& set : sets) {
      PhraseTable table{&set, {}};
      for (const auto& phrase : set.phrases) {
        Template t;
        for (const auto& w : split_spaces(phrase)) {
          t.words.push_back(is_slot(w) ? w : norm(w));
          if (!is_slot(w) && !function_.count(t.words.back())) {
            t.cues.push_back(t.words.back());
          }
        }
        table.templates.push_back(std::move(t));
      }
      out.push_back(std::move(table));
    }
    return out;
  }

  std::vector<Word> tokenize(const std::string& text) const {
    static const std::string kKeep = ",.;!?";
    static const std::string kDrop = "\"'():`";
    std::vector<Word> out;
    for (const auto& chunk : split_spaces(lower(text))) {
      std::size_t b = 0;
      std::size_t e = chunk.size();
      while (b < e && (kKeep + kDrop).find(chunk[b]) != std::string::npos) ++b;
      std::vector<std::string> tail;
      while (e > b && (kKeep + kDrop).find(chunk[e - 1]) != std::string::npos) {
        if (kKeep.find(chunk[e - 1]) != std::string::npos) {
          tail.insert(tail.begin(), std::string(1, chunk[e - 1]));
        }
        --e;
      }
      if (e > b) {
        auto w = chunk.substr(b, e - b);
        out.push_back({w, norm(w)});
      }
      for (const auto& t : tail) out.push_back({t, t});
    }
    return out;
  }

  static std::vector<std::vector<Word>> split_sentences(const std::vector<Word>& words) {
    std::vector<std::vector<Word>> out(1);
    for (const auto& w : words) {
      if (w.text == "." || w.text == ";" || w.text == "!" || w.text == "?") {
        if (!out.back().empty()) out.emplace_back();
      } else {
        out.back().push_back(w);
      }
    }
    if (out.back().empty()) out.pop_back();
    return out;
  }

  // Longest noun pattern at words[i]; subject-only names are skipped in
  // declarations.
  const NounPattern* noun_at(Words words, std::size_t i, bool subjects) const {
    for (const auto& p : nouns_) {
      if (p.subject_only && !subjects) continue;
      if (i + p.words.size() > words.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; ok && k < p.words.size(); ++k) {
        ok = words[i + k].norm == p.words[k];
      }
      if (ok) return &p;
    }
    return nullptr;
  }

  bool declare(const std::vector<Word>& sentence, NlReport& report) {
    struct Mention {
      std::string kind;
      int count;
      std::size_t begin;
      std::size_t end;
    };
    std::vector<Mention> mentions;
    const Words words(sentence);
    for (std::size_t i = 0; i < words.size();) {
      auto q = quantities_.find(words[i].text);
      if (q != quantities_.end()) {
        const auto* p = noun_at(words, i + 1, false);
        if (p != nullptr && p->plural) {
          mentions.push_back({p->kind, q->second, i, i + 1 + p->words.size()});
          i = mentions.back().end;
          continue;
        }
      }
      const auto* p = noun_at(words, i, false);
      if (p != nullptr && !p->plural) {
        mentions.push_back({p->kind, 1, i, i + p->words.size()});
        i = mentions.back().end;
        continue;
      }
      ++i;
    }
    for (std::size_t m = 0; m < mentions.size(); ++m) {
      const auto& mention = mentions[m];
      const auto& entry = catalog_.lookup(mention.kind);
      const auto stop = m + 1 < mentions.size() ? mentions[m + 1].begin : words.size();
      std::vector<ArgBinding> args;
      for (std::size_t i = mention.end; i < stop; ++i) {
        if (!is_placeholder(words[i].text)) continue;
        const auto family = placeholder_family(words[i].text);
        auto bound = [&](const std::string& name) {
          return std::any_of(args.begin(), args.end(),
                             [&](const auto& a) { return a.name == name; });
        };
        auto fits = [&](const ArgSpec& spec) {
          return (family == LiteralFamily::kNumber) == (spec.type == ArgType::kNumber);
        };
        std::string name;
        const auto& cues = cues_[mention.kind];
        if (i > 0) {
          auto cue = cues.find(words[i - 1].norm);
          if (cue != cues.end() && !bound(cue->second) &&
              fits(*entry.find_arg(cue->second))) {
            name = cue->second;
          }
        }
        for (const auto& spec : entry.args) {
          if (!name.empty()) break;
          if (!bound(spec.name) && fits(spec)) name = spec.name;
        }
        if (name.empty()) {
          report.warnings.push_back("no " + mention.kind + " argument takes " +
                                    words[i].text);
          continue;
        }
        args.push_back({name, LiteralRef{words[i].text}});
      }
      for (int c = 0; c < mention.count; ++c) {
        screen_.components.push_back(
            {mention.kind, ++counts_[mention.kind], c == 0 ? args : std::vector<ArgBinding>{}});
      }
    }
    return !mentions.empty();
  }

  std::optional<ComponentRef> reference(Words words, std::string_view kind,
                                        bool subjects) const {
    std::size_t i = 0;
    if (i < words.size() && (words[i].norm == norm("the") || words[i].norm == norm("a"))) ++i;
    int index = 1;
    if (i < words.size()) {
      auto o = ordinals_.find(words[i].text);
      if (o != ordinals_.end()) {
        index = o->second;
        ++i;
      }
    }
    bool found = false;
    for (const auto& n : nouns_) {
      if (found) break;
      if (n.kind != kind || n.plural || (n.subject_only && !subjects) ||
          n.words.size() != words.size() - i) {
        continue;
      }
      found = std::equal(n.words.begin(), n.words.end(), words.begin() + static_cast<std::ptrdiff_t>(i),
                         [](const std::string& p, const Word& w) { return w.norm == p; });
    }
    if (!found) return std::nullopt;
    auto count = counts_.find(std::string(kind));
    if (count == counts_.end() || count->second < index) return std::nullopt;
    return ComponentRef{std::string(kind), index};
  }

  static bool accepts_family(const ParamSpec& param, LiteralFamily family) {
    if (family == LiteralFamily::kNumber) return param.accepts_kind(ValueKind::kNumber);
    return param.accepts_kind(ValueKind::kString) || param.accepts_kind(ValueKind::kColor);
  }

  std::optional<ValueRef> value(Words words, const ParamSpec& param) const {
    if (words.size() == 1 && is_placeholder(words[0].text)) {
      if (!accepts_family(param, placeholder_family(words[0].text))) return std::nullopt;
      return LiteralRef{words[0].text};
    }
    if (!param.accepts_kind(ValueKind::kProperty)) return std::nullopt;
    for (const auto& table : properties_) {
      for (const auto& t : table.templates) {
        Bindings b;
        if (match(t.words, 0, words, 0, table.set->kind, nullptr, false, b)) {
          return PropertyRef{*b.target, table.set->name};
        }
      }
    }
    return std::nullopt;
  }

  struct Bindings {
    std::optional<ComponentRef> target;
    std::optional<ValueRef> value;
  };

  // Matches template words[ti..] against words[wi..] exactly, filling the
  // {subject}/{target} and {value} slots by backtracking over span ends.
  bool match(const std::vector<std::string>& tpl, std::size_t ti, Words words,
             std::size_t wi, const std::string& kind, const ParamSpec* param,
             bool subjects, Bindings& out) const {
    if (ti == tpl.size()) return wi == words.size();
    const auto& t = tpl[ti];
    if (!is_slot(t)) {
      return wi < words.size() && words[wi].norm == t &&
             match(tpl, ti + 1, words, wi + 1, kind, param, subjects, out);
    }
    for (std::size_t end = wi + 1; end <= words.size(); ++end) {
      const auto span = words.subspan(wi, end - wi);
      Bindings next = out;
      if (t == "{value}") {
        if (param == nullptr) return false;
        next.value = value(span, *param);
        if (!next.value) continue;
      } else {
        next.target = reference(span, kind, subjects);
        if (!next.target) continue;
      }
      if (match(tpl, ti + 1, words, end, kind, param, subjects, next)) {
        out = next;
        return true;
      }
    }
    return false;
  }

  // First reference in `words` to a declared component of `kind`.
  std::optional<ComponentRef> find_reference(Words words, std::string_view kind,
                                             bool subjects) const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto* p = noun_at(words, i, subjects);
      if (p == nullptr || p->plural || p->kind != kind) continue;
      int index = 1;
      if (i > 0) {
        auto o = ordinals_.find(words[i - 1].text);
        if (o != ordinals_.end()) index = o->second;
      }
      auto count = counts_.find(p->kind);
      if (count != counts_.end() && count->second >= index) {
        return ComponentRef{p->kind, index};
      }
    }
    return std::nullopt;
  }

  std::optional<EventRef> event(Words clause, bool fuzzy) const {
    for (const auto& table : events_) {
      for (const auto& t : table.templates) {
        Bindings b;
        if (fuzzy) {
          b.target = find_reference(clause, table.set->kind, true);
          if (b.target) return EventRef{*b.target, table.set->name};
        } else if (match(t.words, 0, clause, 0, table.set->kind, nullptr, true, b)) {
          return EventRef{*b.target, table.set->name};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ActionInst> fuzzy_action(const PhraseTable& table, const Template& t,
                                         Words part) const {
    const auto& entry = catalog_.lookup(table.set->kind);
    const auto& spec = *entry.find_action(table.set->name);
    for (const auto& cue : t.cues) {
      if (std::none_of(part.begin(), part.end(),
                       [&](const Word& w) { return w.norm == cue; })) {
        return std::nullopt;
      }
    }
    ActionInst action{spec.name, {}, {}};
    if (t.has("{target}")) {
      auto target = find_reference(part, entry.kind, false);
      if (!target) return std::nullopt;
      action.target = *target;
    } else {
      auto count = counts_.find(entry.kind);
      if (!entry.singleton || count == counts_.end()) return std::nullopt;
      action.target = {entry.kind, 1};
    }
    for (const auto& param : spec.params) {
      std::optional<ValueRef> v;
      for (const auto& w : part) {
        if (is_placeholder(w.text) && accepts_family(param, placeholder_family(w.text))) {
          v = LiteralRef{w.text};
          break;
        }
      }
      if (!v && param.accepts_kind(ValueKind::kProperty)) {
        for (const auto& source : catalog_.entries()) {
          if (source.properties.empty()) continue;
          auto ref = find_reference(part, source.kind, false);
          if (!ref || *ref == action.target) continue;
          const auto* prop = &source.properties.front();
          for (const auto& p : source.properties) {
            if (std::any_of(part.begin(), part.end(),
                            [&](const Word& w) { return w.text == p.name; })) {
              prop = &p;
            }
          }
          v = PropertyRef{*ref, prop->name};
          break;
        }
      }
      if (!v) return std::nullopt;
      action.values.push_back({param.name, *v});
    }
    return action;
  }

  std::optional<ActionInst> action(Words part, NlReport& report) const {
    std::vector<ActionInst> found;
    for (int pass = 0; pass < 2 && found.empty(); ++pass) {
      for (const auto& table : actions_) {
        const auto& spec =
            *catalog_.lookup(table.set->kind).find_action(table.set->name);
        const ParamSpec* param = spec.params.empty() ? nullptr : &spec.params.front();
        for (const auto& t : table.templates) {
          std::optional<ActionInst> hit;
          if (pass == 0) {
            Bindings b;
            if (!match(t.words, 0, part, 0, table.set->kind, param, false, b)) continue;
            ActionInst a{spec.name, {}, {}};
            if (b.target) {
              a.target = *b.target;
            } else {
              auto count = counts_.find(table.set->kind);
              if (count == counts_.end()) continue;
              a.target = {table.set->kind, 1};
            }
            if (param != nullptr) a.values.push_back({param->name, *b.value});
            hit = std::move(a);
          } else {
            hit = fuzzy_action(table, t, part);
          }
          if (hit && std::find(found.begin(), found.end(), *hit) == found.end()) {
            found.push_back(*hit);
          }
          if (hit) break;
        }
      }
    }
    if (found.empty()) return std::nullopt;
    if (found.size() > 1) {
      std::string alternatives;
      for (std::size_t i = 1; i < found.size(); ++i) {
        alternatives += " " + action_token(found[i], catalog_);
      }
      report.warnings.push_back("ambiguous clause '" + join(part) + "': chose " +
                                action_token(found[0], catalog_) + " over" +
                                alternatives);
    }
    return found.front();
  }

  bool separator(const Word& w) const {
    return w.text == "," || w.text == "and" || w.norm == norm("then");
  }

  void behaviour(const std::vector<Word>& sentence, NlReport& report) {
    const Words words = Words(sentence).subspan(1);
    std::optional<EventRef> ev;
    std::size_t rest = 0;
    const auto comma = std::find_if(words.begin(), words.end(),
                                    [](const Word& w) { return w.text == ","; });
    if (comma != words.end()) {
      rest = static_cast<std::size_t>(comma - words.begin());
      const auto clause = words.first(rest);
      ev = event(clause, false);
      if (!ev) ev = event(clause, true);
    } else {
      for (std::size_t k = 1; k < words.size() && !ev; ++k) {
        ev = event(words.first(k), false);
        rest = k;
      }
    }
    if (!ev) {
      report.unmatched.push_back(join(sentence));
      return;
    }

    std::vector<ActionInst> actions;
    std::size_t begin = rest;
    for (std::size_t i = rest; i <= words.size(); ++i) {
      if (i < words.size() && !separator(words[i])) continue;
      if (i > begin) {
        const auto part = words.subspan(begin, i - begin);
        if (auto a = action(part, report)) {
          actions.push_back(std::move(*a));
        } else {
          report.unmatched.push_back(join(part));
        }
      }
      begin = i + 1;
    }
    if (actions.empty()) {
      report.unmatched.push_back(join(sentence));
      return;
    }
    for (auto& block : screen_.code) {
      if (block.event == *ev) {
        block.actions.insert(block.actions.end(), actions.begin(), actions.end());
        return;
      }
    }
    screen_.code.push_back({*ev, std::move(actions)});
  }

  const Catalog& catalog_;
  const Snippets& snippets_;
  const Lexicon& lexicon_;
  std::set<std::string> function_;
  std::set<std::string> markers_;
  std::map<std::string, int, std::less<>> ordinals_;
  std::map<std::string, int, std::less<>> quantities_;
  std::vector<NounPattern> nouns_;
  std::map<std::string, std::map<std::string, std::string>> cues_;
  std::vector<PhraseTable> events_;
  std::vector<PhraseTable> actions_;
  std::vector<PhraseTable> properties_;
  Screen screen_;
  std::map<std::string, int, std::less<>> counts_;
};

}  // namespace

NlResult nl_to_sar(std::string_view nl, const LiteralDict& known,
                   const Catalog& catalog, const Snippets& snippets,
                   const Lexicon& lexicon) {
  return Translator(catalog, snippets, lexicon).run(nl, known);
}

}  // namespace sar
