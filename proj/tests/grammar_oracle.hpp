#pragma once

// Independent model of the SAR grammar over a three-component alphabet
// (button, label, text2speech): a bounded derivation enumerator and a
// regular-expression membership oracle. Neither shares code with the parser.

#include <boost/regex.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sar/rng.hpp"

namespace sar::testing {

using Sentence = std::vector<std::string>;

// Productions over abstract symbols. Lowercase-initial names are
// nonterminals; everything else is a terminal token. Symbols listed in
// `items` cost one unit each; the budget bounds the total item count of a
// derivation (screens, components, arguments, events, actions).
class GrammarEnumerator {
 public:
  // `compact` reduces values to a single placeholder; corruptions still
  // draw from the full vocabulary.
  explicit GrammarEnumerator(bool compact = false) {
    add("sar", {{"screens"}});
    add("screens", {{"screen"}, {"screen", "<NEXT>", "screens"}});
    add("screen", {{"complist"}, {"complist", "code"}});
    add("complist", {{"<complist>", "</complist>"}, {"<complist>", "comps", "</complist>"}});
    add("comps", {{"comp"}, {"comps", "comp"}});
    add("comp", {{"<button>"}, {"<button>", "args", "</button>"},
                 {"<label>"}, {"<label>", "args", "</label>"},
                 {"<text2speech>"}, {"<text2speech>", "args", "</text2speech>"}});
    add("code", {{"<code>", "</code>"}, {"<code>", "events", "</code>"}});
    add("events", {{"event"}, {"event", "events"}});
    add("event", {{"<button1_clicked>", "actions", "</button1_clicked>"}});
    add("actions", {{"action"}, {"actions", "action"}});
    add("action", {{"<speak>"}, {"<speak>", "args", "</speak>"},
                   {"<label1_settext>"}, {"<label1_settext>", "args", "</label1_settext>"}});
    add("args", {{"arg"}, {"arg", "args"}});
    add("arg", {{"<text>", "val", "</text>"}, {"val"}});
    if (compact) {
      add("val", {{"string0"}});
    } else {
      add("val", {{"string0"}, {"number0"}, {"<label1text>"}, {"hello"}, {"hello", "world"}});
    }
    items_ = {"screen", "comp", "arg", "event", "action"};
  }

  // Every terminal sentence whose derivation uses at most `budget` items.
  std::vector<Sentence> enumerate(int budget) {
    std::set<Sentence> all;
    for (int c = 0; c <= budget; ++c) {
      for (auto& s : derive("sar", c)) all.insert(s);
    }
    return {all.begin(), all.end()};
  }

 private:
  void add(const std::string& lhs, std::vector<Sentence> alternatives) {
    rules_[lhs] = std::move(alternatives);
  }

  bool nonterminal(const std::string& s) const { return rules_.count(s) > 0; }

  // Sentences derivable from `symbol` at exactly `cost` items.
  const std::vector<Sentence>& derive(const std::string& symbol, int cost) {
    const auto key = std::make_pair(symbol, cost);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto& out = memo_[key];  // empty while in progress cuts left recursion
    if (cost < 0) return out;
    const int own = items_.count(symbol) ? 1 : 0;
    std::set<Sentence> found;
    for (const auto& rhs : rules_.at(symbol)) {
      for (auto& s : sequence(rhs, 0, cost - own)) found.insert(std::move(s));
    }
    out.assign(found.begin(), found.end());
    return memo_[key];
  }

  std::vector<Sentence> sequence(const Sentence& rhs, std::size_t i, int cost) {
    if (cost < 0) return {};
    if (i == rhs.size()) return cost == 0 ? std::vector<Sentence>{{}} : std::vector<Sentence>{};
    if (!nonterminal(rhs[i])) {
      auto rest = sequence(rhs, i + 1, cost);
      for (auto& s : rest) s.insert(s.begin(), rhs[i]);
      return rest;
    }
    std::vector<Sentence> out;
    for (int c = 0; c <= cost; ++c) {
      const auto heads = derive(rhs[i], c);
      if (heads.empty()) continue;
      const auto tails = sequence(rhs, i + 1, cost - c);
      for (const auto& h : heads) {
        for (const auto& t : tails) {
          Sentence s = h;
          s.insert(s.end(), t.begin(), t.end());
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  }

  std::map<std::string, std::vector<Sentence>> rules_;
  std::set<std::string> items_;
  std::map<std::pair<std::string, int>, std::vector<Sentence>> memo_;
};

// Membership oracle: tokens map to one letter each and the language is a
// regular expression over letters (nesting depth is fixed, so regular).
class GrammarOracle {
 public:
  GrammarOracle() {
    letters_ = {{"<complist>", 'C'}, {"</complist>", 'c'}, {"<code>", 'D'},
                {"</code>", 'd'},    {"<NEXT>", 'N'},      {"<button>", 'B'},
                {"</button>", 'b'},  {"<label>", 'L'},     {"</label>", 'l'},
                {"<text2speech>", 'T'}, {"</text2speech>", 't'},
                {"<text>", 'X'},     {"</text>", 'x'},
                {"<button1_clicked>", 'E'}, {"</button1_clicked>", 'e'},
                {"<speak>", 'S'},    {"</speak>", 's'},
                {"<label1_settext>", 'A'}, {"</label1_settext>", 'a'},
                {"string0", 'v'},    {"number0", 'v'},
                {"<label1text>", 'p'}, {"hello", 'w'}, {"world", 'w'}};
    const std::string val = "(?:v|p|w+)";
    const std::string arg = "(?:X" + val + "x|" + val + ")";
    auto tagged = [&](char open, char close) {
      return std::string("(?:") + open + "(?:" + arg + "+" + close + ")?)";
    };
    const std::string comp = "(?:" + tagged('B', 'b') + "|" + tagged('L', 'l') +
                             "|" + tagged('T', 't') + ")";
    const std::string action = "(?:" + tagged('S', 's') + "|" + tagged('A', 'a') + ")";
    const std::string event = "(?:E" + action + "+e)";
    const std::string screen = "(?:C" + comp + "*c(?:D" + event + "*d)?)";
    language_ = boost::regex(screen + "(?:N" + screen + ")*");
  }

  bool accepts(const Sentence& tokens) const {
    std::string word;
    for (const auto& t : tokens) {
      auto it = letters_.find(t);
      word += it == letters_.end() ? '?' : it->second;
    }
    return boost::regex_match(word, language_);
  }

  // Tokens used to build corruptions: the whole alphabet plus junk.
  std::vector<std::string> vocabulary() const {
    std::vector<std::string> out;
    for (const auto& [token, letter] : letters_) out.push_back(token);
    out.push_back("<bogus>");
    out.push_back("</bogus>");
    return out;
  }

 private:
  std::map<std::string, char> letters_;
  boost::regex language_;
};

// One random single-token edit: replace, delete or insert.
inline Sentence corrupt(const Sentence& s, const std::vector<std::string>& vocabulary,
                        Rng& rng) {
  Sentence out = s;
  const auto op = rng.below(s.empty() ? 1 : 3);
  const auto pick = [&] { return vocabulary[rng.below(vocabulary.size())]; };
  if (op == 0) {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(rng.below(out.size() + 1)), pick());
  } else if (op == 1) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.below(out.size())));
  } else {
    out[rng.below(out.size())] = pick();
  }
  return out;
}

inline std::string join(const Sentence& s) {
  std::string out;
  for (const auto& t : s) out += (out.empty() ? "" : " ") + t;
  return out;
}

}  // namespace sar::testing
