#include "sar/parser.hpp"

#include <algorithm>
#include <map>

namespace sar {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// -?[0-9]+(\.[0-9]+)?
bool is_numeric(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return all_digits(text);
  return all_digits(text.substr(0, dot)) && all_digits(text.substr(dot + 1));
}

enum class TagKind {
  kComplist,
  kCode,
  kNext,
  kComponent,
  kArgName,
  kEvent,
  kAction,
  kProperty,
};

struct Tag {
  TagKind kind;
  bool closing = false;
  std::string component;  // catalog kind, when the tag names one
  int index = 0;
  std::string member;  // arg, event, action or property name

  bool same_entity(const Tag& other) const {
    return kind == other.kind && component == other.component &&
           index == other.index && member == other.member;
  }
};

std::optional<Tag> match_member(const Catalog& catalog, std::string_view name) {
  for (const auto& entry : catalog.entries()) {
    for (const auto& event : entry.events) {
      for (std::size_t i = 0; i <= event.aliases.size(); ++i) {
        const auto& p = i == 0 ? event.token : event.aliases[i - 1];
        if (auto index = match_pattern(p, entry.kind, name)) {
          return Tag{TagKind::kEvent, false, entry.kind, *index, event.name};
        }
      }
    }
    for (const auto& action : entry.actions) {
      for (std::size_t i = 0; i <= action.aliases.size(); ++i) {
        const auto& p = i == 0 ? action.token : action.aliases[i - 1];
        if (auto index = match_pattern(p, entry.kind, name)) {
          return Tag{TagKind::kAction, false, entry.kind, *index, action.name};
        }
      }
    }
    for (const auto& property : entry.properties) {
      for (const auto& p : {"{inst}" + property.name,
                            "{kind}" + property.name + "{n}"}) {
        if (auto index = match_pattern(p, entry.kind, name)) {
          return Tag{TagKind::kProperty, false, entry.kind, *index,
                     property.name};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Tag> classify(const Catalog& catalog, std::string_view text) {
  if (text.size() < 3 || text.front() != '<' || text.back() != '>') {
    return std::nullopt;
  }
  bool closing = text[1] == '/';
  std::string_view name = text.substr(closing ? 2 : 1);
  name.remove_suffix(1);
  if (name.empty()) return std::nullopt;
  std::optional<Tag> tag;
  if (name == "complist") {
    tag = Tag{TagKind::kComplist, false, {}, 0, {}};
  } else if (name == "code") {
    tag = Tag{TagKind::kCode, false, {}, 0, {}};
  } else if (name == "NEXT") {
    if (closing) return std::nullopt;
    tag = Tag{TagKind::kNext, false, {}, 0, {}};
  } else if (catalog.find(name) != nullptr) {
    tag = Tag{TagKind::kComponent, false, std::string(name), 0, {}};
  } else if (catalog.is_arg_name(name)) {
    tag = Tag{TagKind::kArgName, false, {}, 0, std::string(name)};
  } else {
    tag = match_member(catalog, name);
    if (tag && tag->kind == TagKind::kProperty && closing) return std::nullopt;
  }
  if (tag) tag->closing = closing;
  return tag;
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t end_offset,
         const Catalog& catalog, LiteralDict literals)
      : tokens_(tokens), end_(end_offset), catalog_(catalog) {
    result_.literals = std::move(literals);
  }

  ParseResult run() {
    result_.app.screens.push_back(screen());
    while (peek_is(TagKind::kNext, false)) {
      ++pos_;
      result_.app.screens.push_back(screen());
    }
    if (pos_ < tokens_.size()) fail("expected end of input or <NEXT>");
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (pos_ >= tokens_.size()) {
      throw SyntaxError(message + ", found end of input", {end_, end_});
    }
    const auto& token = tokens_[pos_];
    throw SyntaxError(message + ", found '" + token.text + "'", token.span);
  }

  // Classification of the current token, if it is a known tag.
  std::optional<Tag> peek() const {
    if (pos_ >= tokens_.size()) return std::nullopt;
    if (pos_ == peeked_pos_) return peeked_;
    const auto& text = tokens_[pos_].text;
    if (text.front() != '<') return std::nullopt;
    auto tag = classify(catalog_, text);
    if (!tag) fail("unknown token");
    peeked_pos_ = pos_;
    peeked_ = tag;
    return tag;
  }

  bool peek_is(TagKind kind, bool closing) const {
    auto tag = peek();
    return tag && tag->kind == kind && tag->closing == closing;
  }

  void expect(TagKind kind, bool closing, const char* spelling) {
    if (!peek_is(kind, closing)) fail(std::string("expected ") + spelling);
    ++pos_;
  }

  void expect_closer(const Tag& open, std::size_t open_pos) {
    auto tag = peek();
    if (!tag || !tag->closing || !tag->same_entity(open)) {
      fail("expected closing tag for '" + tokens_[open_pos].text + "'");
    }
    ++pos_;
  }

  Screen screen() {
    Screen screen;
    counts_.clear();
    expect(TagKind::kComplist, false, "<complist>");
    while (peek_is(TagKind::kComponent, false)) {
      screen.components.push_back(component());
    }
    expect(TagKind::kComplist, true, "</complist>");
    if (peek_is(TagKind::kCode, false)) {
      ++pos_;
      while (peek_is(TagKind::kEvent, false)) screen.code.push_back(event());
      expect(TagKind::kCode, true, "</code>");
    }
    return screen;
  }

  ComponentInst component() {
    const Tag open = *peek();
    const std::size_t open_pos = pos_++;
    ComponentInst comp{open.component, 0, {}};
    comp.index = ++counts_[open.component];
    if (starts_value()) {
      std::vector<std::string> schema;
      for (const auto& a : catalog_.lookup(open.component).args) {
        schema.push_back(a.name);
      }
      comp.args = values(schema);
      expect_closer(open, open_pos);
    } else if (auto tag = peek(); tag && tag->closing && tag->same_entity(open)) {
      fail("empty argument list");
    }
    return comp;
  }

  EventBlock event() {
    const Tag open = *peek();
    const std::size_t open_pos = pos_++;
    EventBlock block{{{open.component, open.index}, open.member}, {}};
    while (peek_is(TagKind::kAction, false)) block.actions.push_back(action());
    if (block.actions.empty()) fail("expected an action");
    expect_closer(open, open_pos);
    return block;
  }

  ActionInst action() {
    const Tag open = *peek();
    const std::size_t open_pos = pos_++;
    ActionInst action{open.member, {open.component, open.index}, {}};
    if (starts_value()) {
      std::vector<std::string> schema;
      const auto& spec =
          *catalog_.lookup(open.component).find_action(open.member);
      for (const auto& p : spec.params) schema.push_back(p.name);
      action.values = values(schema);
      expect_closer(open, open_pos);
    } else if (auto tag = peek(); tag && tag->closing && tag->same_entity(open)) {
      fail("empty value list");
    }
    return action;
  }

  bool starts_value() const {
    if (pos_ >= tokens_.size()) return false;
    if (tokens_[pos_].text.front() != '<') return true;
    auto tag = peek();
    return !tag->closing &&
           (tag->kind == TagKind::kProperty || tag->kind == TagKind::kArgName);
  }

  std::vector<ArgBinding> values(const std::vector<std::string>& schema) {
    std::vector<ArgBinding> out;
    auto bound = [&](const std::string& name) {
      return std::any_of(out.begin(), out.end(),
                         [&](const ArgBinding& b) { return b.name == name; });
    };
    while (starts_value()) {
      auto tag = peek();
      if (tag && tag->kind == TagKind::kArgName) {
        const std::size_t open_pos = pos_++;
        if (!starts_value() || peek_is(TagKind::kArgName, false)) {
          fail("expected a value");
        }
        ValueRef v = value();
        expect_closer(*tag, open_pos);
        out.push_back({tag->member, std::move(v)});
        continue;
      }
      ValueRef v = value();
      std::string name;
      for (const auto& slot : schema) {
        if (!bound(slot)) {
          name = slot;
          break;
        }
      }
      out.push_back({std::move(name), std::move(v)});
    }
    return out;
  }

  ValueRef value() {
    if (auto tag = peek()) {
      ++pos_;
      return PropertyRef{{tag->component, tag->index}, tag->member};
    }
    const auto& first = tokens_[pos_].text;
    if (is_placeholder(first)) {
      ++pos_;
      return LiteralRef{first};
    }
    std::string text;
    std::size_t words = 0;
    while (pos_ < tokens_.size() && tokens_[pos_].text.front() != '<' &&
           !is_placeholder(tokens_[pos_].text)) {
      if (words++ > 0) text += ' ';
      text += tokens_[pos_++].text;
    }
    const auto family = words == 1 && is_numeric(text) ? LiteralFamily::kNumber
                                                       : LiteralFamily::kString;
    return LiteralRef{result_.literals.intern(family, std::move(text))};
  }

  std::span<const Token> tokens_;
  std::size_t end_;
  const Catalog& catalog_;
  std::size_t pos_ = 0;
  std::map<std::string, int> counts_;
  mutable std::size_t peeked_pos_ = static_cast<std::size_t>(-1);
  mutable std::optional<Tag> peeked_;
  ParseResult result_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < source.size()) {
    while (i < source.size() && is_space(source[i])) ++i;
    if (i == source.size()) break;
    const std::size_t start = i;
    while (i < source.size() && !is_space(source[i])) ++i;
    tokens.push_back({std::string(source.substr(start, i - start)), {start, i}});
  }
  return tokens;
}

ParseResult parse(std::span<const Token> tokens, std::size_t end_offset,
                  const Catalog& catalog, LiteralDict literals) {
  return Parser(tokens, end_offset, catalog, std::move(literals)).run();
}

ParseResult parse(std::string_view source, const Catalog& catalog,
                  LiteralDict literals) {
  const auto tokens = tokenize(source);
  return parse(tokens, source.size(), catalog, std::move(literals));
}

}  // namespace sar
