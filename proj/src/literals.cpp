#include "sar/literals.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "json.hpp"
#include "sar/snippets.hpp"

namespace sar {

namespace {

const std::regex& placeholder_regex() {
  static const std::regex re(R"(\b(string|number)(0|[1-9][0-9]*)\b)");
  return re;
}

bool is_number_lexeme(std::string_view text) {
  static const std::regex re(R"(-?[0-9]+(\.[0-9]+)?)");
  return std::regex_match(text.begin(), text.end(), re);
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

std::size_t placeholder_index(std::string_view name) {
  return std::stoul(std::string(name.substr(6)));
}

constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";
constexpr std::string_view kLeftSingle = "\xE2\x80\x98";
constexpr std::string_view kRightSingle = "\xE2\x80\x99";

// Trailing punctuation that may follow a number without being part of it.
bool is_trailing_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
         c == '?' || c == ')';
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Extractor {
 public:
  explicit Extractor(std::string_view nl) : nl_(nl) {
    for (auto it = std::cregex_iterator(nl.data(), nl.data() + nl.size(),
                                        placeholder_regex());
         it != std::cregex_iterator(); ++it) {
      const auto name = it->str();
      auto& next = name[0] == 's' ? next_string_ : next_number_;
      next = std::max(next, placeholder_index(name) + 1);
    }
    const auto& words = Snippets::builtin().component_words();
    component_words_.insert(words.begin(), words.end());
  }

  Extraction run() {
    std::string out;
    std::size_t i = 0;
    while (i < nl_.size()) {
      if (auto close = quote_at(i)) {
        const auto [content_begin, content_end, end] = *close;
        out += bind(LiteralFamily::kString,
                    std::string(nl_.substr(content_begin,
                                           content_end - content_begin)));
        i = end;
        continue;
      }
      if (is_space(nl_[i])) {
        out += nl_[i++];
        continue;
      }
      // A whitespace-delimited word; it may still contain a quote opener
      // only at its start, which quote_at() already handled.
      std::size_t end = i;
      while (end < nl_.size() && !is_space(nl_[end]) && !opens_quote(end)) {
        ++end;
      }
      out += word(nl_.substr(i, end - i), end);
      i = end;
    }
    return {std::move(out), std::move(dict_)};
  }

 private:
  struct Quote {
    std::size_t content_begin;
    std::size_t content_end;
    std::size_t end;
  };

  bool boundary_before(std::size_t i) const {
    return i == 0 || !is_word_char(static_cast<unsigned char>(nl_[i - 1]));
  }

  bool boundary_after(std::size_t i) const {
    return i >= nl_.size() || !is_word_char(static_cast<unsigned char>(nl_[i]));
  }

  bool opens_quote(std::size_t i) const {
    const auto rest = nl_.substr(i);
    if (rest[0] == '"') return true;
    if (rest.starts_with(kLeftDouble)) return true;
    if (rest[0] == '\'' || rest.starts_with(kLeftSingle)) {
      return boundary_before(i);
    }
    return false;
  }

  std::optional<Quote> quote_at(std::size_t i) const {
    if (!opens_quote(i)) return std::nullopt;
    const auto rest = nl_.substr(i);
    if (rest[0] == '"') return find_close(i, 1, "\"", false);
    if (rest.starts_with(kLeftDouble)) {
      return find_close(i, kLeftDouble.size(), kRightDouble, false);
    }
    if (rest[0] == '\'') return find_close(i, 1, "'", true);
    return find_close(i, kLeftSingle.size(), kRightSingle, true);
  }

  // Single quotes close only where a word ends, so apostrophes inside the
  // quoted text ("'don't stop'") are kept.
  Quote find_close(std::size_t open, std::size_t open_size,
                   std::string_view closer, bool needs_boundary) const {
    std::size_t pos = open + open_size;
    while (true) {
      pos = nl_.find(closer, pos);
      if (pos == std::string_view::npos) throw UnbalancedQuote(open);
      if (!needs_boundary || boundary_after(pos + closer.size())) {
        return {open + open_size, pos, pos + closer.size()};
      }
      pos += closer.size();
    }
  }

  std::string bind(LiteralFamily family, std::string value) {
    auto& next = family == LiteralFamily::kString ? next_string_ : next_number_;
    std::string name =
        (family == LiteralFamily::kString ? "string" : "number") +
        std::to_string(next++);
    dict_.set(name, std::move(value));
    return name;
  }

  std::string word(std::string_view text, std::size_t end) {
    std::size_t core = text.size();
    while (core > 0 && is_trailing_punct(text[core - 1])) --core;
    const auto lexeme = text.substr(0, core);
    if (!is_number_lexeme(lexeme) || quantifies(end)) return std::string(text);
    return bind(LiteralFamily::kNumber, std::string(lexeme)) +
           std::string(text.substr(core));
  }

  // True when the next word names a component ("2 buttons").
  bool quantifies(std::size_t end) const {
    std::size_t i = end;
    while (i < nl_.size() && is_space(nl_[i])) ++i;
    std::size_t j = i;
    while (j < nl_.size() && !is_space(nl_[j])) ++j;
    auto next = lower(nl_.substr(i, j - i));
    while (!next.empty() && is_trailing_punct(next.back())) next.pop_back();
    return component_words_.count(next) > 0;
  }

  std::string_view nl_;
  LiteralDict dict_;
  std::size_t next_string_ = 0;
  std::size_t next_number_ = 0;
  std::set<std::string, std::less<>> component_words_;
};

std::string escape(std::string_view value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view value) {
  std::string out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] != '\\' || i + 1 == value.size()) {
      out += value[i];
      continue;
    }
    switch (value[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case '\\': out += '\\'; break;
      default: out += '\\'; out += value[i];
    }
  }
  return out;
}

}  // namespace

LiteralDict::LiteralDict(std::initializer_list<Entry> entries) {
  for (const auto& [name, value] : entries) set(name, value);
}

const std::string* LiteralDict::find(std::string_view name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return &value;
  }
  return nullptr;
}

const std::string& LiteralDict::at(std::string_view name) const {
  if (const auto* value = find(name)) return *value;
  throw MissingLiteral(std::string(name));
}

void LiteralDict::set(std::string name, std::string value) {
  for (auto& entry : entries_) {
    if (entry.first == name) {
      entry.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(value));
}

std::string LiteralDict::next_name(LiteralFamily family) const {
  const std::string prefix =
      family == LiteralFamily::kString ? "string" : "number";
  std::size_t next = 0;
  for (const auto& [name, value] : entries_) {
    if (is_placeholder(name) && name.starts_with(prefix)) {
      next = std::max(next, placeholder_index(name) + 1);
    }
  }
  return prefix + std::to_string(next);
}

std::string LiteralDict::intern(LiteralFamily family, std::string value) {
  auto name = next_name(family);
  entries_.emplace_back(name, std::move(value));
  return name;
}

std::string to_sidecar(const LiteralDict& dict) {
  std::string out;
  for (const auto& [name, value] : dict.entries()) {
    out += name + "\t" + escape(value) + "\n";
  }
  return out;
}

LiteralDict from_sidecar(std::string_view text) {
  LiteralDict dict;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || !is_placeholder(line.substr(0, tab))) {
      throw ConfigError("literal sidecar line " + std::to_string(line_no) +
                        ": expected placeholder<TAB>value");
    }
    dict.set(std::string(line.substr(0, tab)), unescape(line.substr(tab + 1)));
  }
  return dict;
}

std::string to_json(const LiteralDict& dict) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, value] : dict.entries()) out[name] = value;
  return out.dump();
}

LiteralDict dict_from_json(std::string_view text) {
  LiteralDict dict;
  try {
    const auto root = nlohmann::ordered_json::parse(text);
    if (!root.is_object()) throw ConfigError("literal dict must be an object");
    for (auto it = root.begin(); it != root.end(); ++it) {
      dict.set(it.key(), it.value().is_string() ? it.value().get<std::string>()
                                                : it.value().dump());
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ConfigError(std::string("literal dict: ") + e.what());
  }
  return dict;
}

Extraction extract_literals(std::string_view nl) { return Extractor(nl).run(); }

std::string restore_literals(std::string_view templated,
                             const LiteralDict& dict) {
  std::string out;
  const char* cursor = templated.data();
  const char* end = templated.data() + templated.size();
  for (auto it = std::cregex_iterator(cursor, end, placeholder_regex());
       it != std::cregex_iterator(); ++it) {
    const auto& m = *it;
    out.append(cursor, m[0].first);
    const auto name = m.str();
    const auto& value = dict.at(name);
    if (name[0] == 's') {
      out += '"' + value + '"';
    } else {
      out += value;
    }
    cursor = m[0].second;
  }
  out.append(cursor, end);
  return out;
}

std::string strip_quotes(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    const auto rest = text.substr(i);
    if (rest[0] == '"' || rest[0] == '\'') {
      ++i;
    } else if (rest.starts_with(kLeftDouble) || rest.starts_with(kRightDouble) ||
               rest.starts_with(kLeftSingle) || rest.starts_with(kRightSingle)) {
      i += 3;
    } else {
      out += rest[0];
      ++i;
    }
  }
  return out;
}

}  // namespace sar
