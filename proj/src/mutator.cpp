#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include "sar/synthesizer.hpp"

namespace sar {

namespace {

struct Word {
  std::size_t begin;  // core span inside the text, punctuation excluded
  std::size_t end;
  std::string lower;
};

std::vector<std::string> words_of(const std::string& phrase) {
  std::istringstream in(phrase);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

// Words a noun phrase cannot lose without naming a different kind (or no
// kind at all). "audio" in "audio player" is free because "player" still
// names a player; "video" in "video player" is not.
std::set<std::string> protected_words(const Snippets& snippets,
                                      const Catalog& catalog) {
  std::set<std::string> out;
  for (const auto& entry : catalog.entries()) {
    const auto& phrases = snippets.component(entry.kind);
    std::set<std::string> names(phrases.nouns.begin(), phrases.nouns.end());
    names.insert(phrases.event_subjects.begin(), phrases.event_subjects.end());
    for (const auto& name : names) {
      const auto words = words_of(name);
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto rest = words;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (rest.empty() || !names.count(join(rest))) out.insert(words[i]);
      }
      out.insert(plural(words.back()));
    }
  }
  return out;
}

std::vector<Word> split_words(std::string_view text) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end == i) break;
    std::size_t b = i;
    std::size_t e = end;
    while (b < e && !std::isalnum(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && !std::isalnum(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string lower(text.substr(b, e - b));
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back({b, e, std::move(lower)});
    i = end;
  }
  return out;
}

std::vector<std::size_t> eligible(const std::vector<Word>& words,
                                  const Lexicon& lexicon,
                                  const Snippets& snippets) {
  static const auto kBuiltin =
      protected_words(Snippets::builtin(), Catalog::builtin());
  std::set<std::string> custom;
  if (&snippets != &Snippets::builtin()) {
    custom = protected_words(snippets, Catalog::builtin());
  }
  const auto& guarded = &snippets == &Snippets::builtin() ? kBuiltin : custom;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i].lower;
    if (w.empty() || is_placeholder(w) || guarded.count(w)) continue;
    if (lexicon.class_of(w)) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::string> mutable_words(std::string_view nl,
                                       const Lexicon& lexicon,
                                       const Snippets& snippets) {
  const auto words = split_words(nl);
  std::vector<std::string> out;
  for (auto i : eligible(words, lexicon, snippets)) out.push_back(words[i].lower);
  return out;
}

std::string mutate(std::string_view nl, double rate, const Lexicon& lexicon,
                   Rng& rng, const Snippets& snippets) {
  const auto words = split_words(nl);
  const auto candidates = eligible(words, lexicon, snippets);

  // Every draw happens regardless of rate so that rates share a prefix.
  std::vector<std::string> replacement(words.size());
  for (auto i : candidates) {
    const auto& cls = lexicon.classes()[*lexicon.class_of(words[i].lower)];
    std::vector<std::string> others;
    for (const auto& w : cls.words) {
      if (w != words[i].lower) others.push_back(w);
    }
    replacement[i] = rng.pick(others);
  }
  auto order = candidates;
  rng.shuffle(order.begin(), order.end());

  const auto wanted = static_cast<std::size_t>(
      std::llround(std::clamp(rate, 0.0, 1.0) * static_cast<double>(words.size())));
  order.resize(std::min(order.size(), wanted));
  std::sort(order.begin(), order.end());

  std::string out;
  std::size_t pos = 0;
  for (auto i : order) {
    const auto& w = words[i];
    out.append(nl.substr(pos, w.begin - pos));
    auto text = replacement[i];
    if (std::isupper(static_cast<unsigned char>(nl[w.begin]))) {
      text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    }
    out += text;
    pos = w.end;
  }
  out.append(nl.substr(pos));
  return out;
}

}  // namespace sar
