#include "sar/parser.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace sar {
namespace {

constexpr const char* kFig1 =
    "<complist> <textbox> <button> string0 </button> <text2speech> "
    "</complist> <code> <button1_clicked> <speak> <textbox1text> </speak> "
    "</button1_clicked> </code>";

std::size_t whitespace_count(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

TEST(Tokenize, Basics) {
  EXPECT_EQ(tokenize("<complist> </complist>").size(), 2u);
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t\n ").empty());
  const auto tokens = tokenize("  ab\tc ");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0], (Token{"ab", {2, 4}}));
  EXPECT_EQ(tokens[1], (Token{"c", {5, 6}}));
}

TEST(Tokenize, SpeakItCountMatchesWhitespaceSplit) {
  EXPECT_EQ(tokenize(kFig1).size(), whitespace_count(kFig1));
  EXPECT_EQ(tokenize(kFig1).size(), 14u);
}

TEST(Tokenize, SpansCoverEveryNonSpaceByte) {
  const std::string text = " a  <b>\n\tccc d ";
  std::string covered(text.size(), ' ');
  std::size_t last_end = 0;
  for (const auto& t : tokenize(text)) {
    EXPECT_GE(t.span.begin, last_end);
    last_end = t.span.end;
    EXPECT_EQ(text.substr(t.span.begin, t.span.end - t.span.begin), t.text);
    for (auto i = t.span.begin; i < t.span.end; ++i) covered[i] = text[i];
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      EXPECT_EQ(covered[i], text[i]);
    }
  }
}

TEST(Parse, SpeakIt) {
  const auto result = parse(kFig1);
  const auto& screen = result.app.screens.at(0);
  ASSERT_EQ(screen.components.size(), 3u);
  EXPECT_EQ(screen.components[1].kind, "button");
  EXPECT_EQ(screen.components[1].args,
            (std::vector<ArgBinding>{{"text", LiteralRef{"string0"}}}));
  ASSERT_EQ(screen.code.size(), 1u);
  const auto& block = screen.code[0];
  EXPECT_EQ(block.event, (EventRef{{"button", 1}, "clicked"}));
  ASSERT_EQ(block.actions.size(), 1u);
  EXPECT_EQ(block.actions[0].action, "speak");
  EXPECT_EQ(block.actions[0].target, (ComponentRef{"text2speech", 1}));
  EXPECT_EQ(block.actions[0].values,
            (std::vector<ArgBinding>{
                {"message", PropertyRef{{"textbox", 1}, "text"}}}));
  EXPECT_TRUE(validate(result.app).empty());
  EXPECT_EQ(serialize(result.app), kFig1);
  EXPECT_TRUE(result.literals.empty());
}

TEST(Parse, TwitterAliasesAndRawLiterals) {
  const auto result = parse(
      "<complist> <textbox> <button> tweet </button> <label> label1 </label> "
      "</complist> <code> <button1clicked> <label1> <textboxtext1> </label1> "
      "</button1clicked> </code>");
  const auto& screen = result.app.screens.at(0);
  EXPECT_EQ(screen.components.size(), 3u);
  ASSERT_EQ(screen.code.size(), 1u);
  EXPECT_EQ(screen.code[0].event, (EventRef{{"button", 1}, "clicked"}));
  EXPECT_EQ(screen.code[0].actions[0].action, "settext");
  EXPECT_EQ(result.literals,
            (LiteralDict{{"string0", "tweet"}, {"string1", "label1"}}));
  EXPECT_TRUE(validate(result.app).empty());
  EXPECT_EQ(serialize(result.app),
            "<complist> <textbox> <button> string0 </button> <label> string1 "
            "</label> </complist> <code> <button1_clicked> <label1_settext> "
            "<textbox1text> </label1_settext> </button1_clicked> </code>");
}

TEST(Parse, RawRunsAndNumbers) {
  const auto result = parse(
      "<complist> <ball> <speed> 7 </speed> </ball> <accelerometer> "
      "<text2speech> </complist> <code> <accelerometer1_shaken> <speak> "
      "vibration detected </speak> </accelerometer1_shaken> </code>",
      Catalog::builtin(), LiteralDict{{"string0", "x"}});
  EXPECT_EQ(result.literals,
            (LiteralDict{{"string0", "x"},
                         {"number0", "7"},
                         {"string1", "vibration detected"}}));
  EXPECT_TRUE(validate(result.app).empty());
}

TEST(Parse, UnclosedFailsAtEndOfInput) {
  const std::string text = "<complist> <button>";
  try {
    parse(text);
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.span(), (Span{text.size(), text.size()}));
  }
}

TEST(Parse, Errors) {
  for (const char* bad : {
           "",
           "<complist>",
           "<code> </code>",
           "<complist> <button> </button> </complist>",
           "<complist> <spreadsheet> </complist>",
           "<complist> </complist> <code> <button1_clicked> </button1_clicked> </code>",
           "<complist> <button> string0 </textbox> </complist>",
           "<complist> </complist> <code> </code> <code> </code>",
           "<complist> </complist> <NEXT>",
           "<complist> <button> <text> </text> </button> </complist>",
           "<complist> </complist> </NEXT>",
           "<complist> <button> string0 </complist>",
       }) {
    EXPECT_THROW(parse(bad), SyntaxError) << bad;
  }
}

TEST(Parse, ErrorSpansLieWithinInput) {
  const std::string text = "<complist> <button> hello </complist>";
  try {
    parse(text);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_LE(e.span().end, text.size());
    EXPECT_EQ(text.substr(e.span().begin, e.span().end - e.span().begin),
              "</complist>");
  }
}

TEST(Parse, CodeSectionIsOptional) {
  const auto a = parse("<complist> <button> </complist>");
  const auto b = parse("<complist> <button> </complist> <code> </code>");
  EXPECT_EQ(a.app, b.app);
  EXPECT_EQ(serialize(a.app), "<complist> <button> </complist> <code> </code>");
}

TEST(Parse, MultiScreen) {
  const auto r = parse(
      "<complist> <button> </complist> <NEXT> <complist> <button> <button> "
      "</complist> <code> <button2_clicked> <speak> string0 </speak> "
      "</button2_clicked> </code>");
  ASSERT_EQ(r.app.screens.size(), 2u);
  EXPECT_EQ(r.app.screens[1].components[1].index, 2);
  const auto diags = validate(r.app);
  ASSERT_EQ(diags.size(), 1u);  // no text2speech on screen 2
  EXPECT_EQ(diags[0].code, "DANGLING_COMPONENT_REF");
}

TEST(Parse, NamedAndPositionalArgs) {
  const auto r = parse(
      "<complist> <ball> <radius> number0 </radius> string0 </ball> "
      "</complist>");
  const auto& args = r.app.screens[0].components[0].args;
  ASSERT_EQ(args.size(), 2u);
  EXPECT_EQ(args[0].name, "radius");
  EXPECT_EQ(args[1].name, "color");
  EXPECT_EQ(serialize(r.app),
            "<complist> <ball> string0 <radius> number0 </radius> </ball> "
            "</complist> <code> </code>");
}

TEST(Parse, SemanticProblemsAreLeftToValidate) {
  const auto r = parse(
      "<complist> <text2speech> <text2speech> <button> a b </button> "
      "</complist> <code> <button2_clicked> <speak> string0 string1 </speak> "
      "</button2_clicked> </code>");
  std::vector<std::string> codes;
  for (const auto& d : validate(r.app)) codes.push_back(d.code);
  EXPECT_EQ(codes, (std::vector<std::string>{"SINGLETON_VIOLATION",
                                             "DANGLING_COMPONENT_REF",
                                             "TOO_MANY_ARGUMENTS"}));
}

}  // namespace
}  // namespace sar
