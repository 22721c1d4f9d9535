#include "sar/ast.hpp"

#include <gtest/gtest.h>

#include "app_gen.hpp"
#include "sar/parser.hpp"

namespace sar {
namespace {

ComponentInst comp(std::string kind, int index,
                   std::vector<ArgBinding> args = {}) {
  return {std::move(kind), index, std::move(args)};
}

SarApp speak_it_app() {
  Screen s;
  s.components = {comp("textbox", 1),
                  comp("button", 1, {{"text", LiteralRef{"string0"}}}),
                  comp("text2speech", 1)};
  s.code = {{{{"button", 1}, "clicked"},
             {{"speak",
               {"text2speech", 1},
               {{"message", PropertyRef{{"textbox", 1}, "text"}}}}}}};
  return {{s}};
}

std::vector<std::string> codes(const SarApp& app) {
  std::vector<std::string> out;
  for (const auto& d : validate(app)) out.push_back(d.code);
  return out;
}

TEST(Serialize, MinimalDerivation) {
  SarApp app{{Screen{{comp("button", 1)}, {}}}};
  EXPECT_EQ(serialize(app), "<complist> <button> </complist> <code> </code>");
}

TEST(Serialize, SpeakIt) {
  EXPECT_EQ(serialize(speak_it_app()),
            "<complist> <textbox> <button> string0 </button> <text2speech> "
            "</complist> <code> <button1_clicked> <speak> <textbox1text> "
            "</speak> </button1_clicked> </code>");
}

TEST(Serialize, AdditionApp) {
  SarApp app{{Screen{{comp("textbox", 1), comp("textbox", 2),
                      comp("button", 1, {{"text", LiteralRef{"string0"}}})},
                     {}}}};
  EXPECT_EQ(serialize(app),
            "<complist> <textbox> <textbox> <button> string0 </button> "
            "</complist> <code> </code>");
}

TEST(Serialize, InvalidThrows) {
  SarApp app{{Screen{{comp("text2speech", 1), comp("text2speech", 2)}, {}}}};
  EXPECT_THROW(serialize(app), InvariantViolation);
  EXPECT_THROW(serialize(SarApp{}), InvariantViolation);
}

TEST(Validate, SpeakItIsClean) { EXPECT_TRUE(validate(speak_it_app()).empty()); }

TEST(Validate, Singleton) {
  SarApp app{{Screen{{comp("text2speech", 1), comp("text2speech", 2)}, {}}}};
  EXPECT_EQ(codes(app), std::vector<std::string>{"SINGLETON_VIOLATION"});
}

TEST(Validate, DanglingEvent) {
  auto app = speak_it_app();
  app.screens[0].code[0].event.component.index = 2;
  EXPECT_EQ(codes(app), std::vector<std::string>{"DANGLING_COMPONENT_REF"});
  EXPECT_EQ(validate(app)[0].path, "screens[0].code[0]");
}

TEST(Validate, Catalogue) {
  struct Case {
    const char* code;
    void (*mutate)(SarApp&);
  };
  const Case cases[] = {
      {"EMPTY_APP", [](SarApp& a) { a.screens.clear(); }},
      {"UNKNOWN_COMPONENT",
       [](SarApp& a) { a.screens[0].components.push_back(comp("slider", 1)); }},
      {"NON_DENSE_INDEX",
       [](SarApp& a) { a.screens[0].components.push_back(comp("label", 2)); }},
      {"INVALID_INDEX",
       [](SarApp& a) { a.screens[0].components.push_back(comp("label", 0)); }},
      {"UNKNOWN_ARGUMENT",
       [](SarApp& a) {
         a.screens[0].components[0].args.push_back({"color", LiteralRef{"string1"}});
       }},
      {"DUPLICATE_ARGUMENT",
       [](SarApp& a) {
         a.screens[0].components[1].args.push_back({"text", LiteralRef{"string1"}});
       }},
      {"TOO_MANY_ARGUMENTS",
       [](SarApp& a) {
         a.screens[0].components[1].args.push_back({"", LiteralRef{"string1"}});
       }},
      {"PROPERTY_NOT_ALLOWED",
       [](SarApp& a) {
         a.screens[0].components[1].args[0].value =
             PropertyRef{{"textbox", 1}, "text"};
       }},
      {"INVALID_PLACEHOLDER",
       [](SarApp& a) {
         a.screens[0].components[1].args[0].value = LiteralRef{"string01"};
       }},
      {"ARGUMENT_TYPE_MISMATCH",
       [](SarApp& a) {
         a.screens[0].components.push_back(
             comp("ball", 1, {{"speed", LiteralRef{"string4"}}}));
       }},
      {"UNKNOWN_EVENT",
       [](SarApp& a) { a.screens[0].code[0].event.event = "flipped"; }},
      {"EMPTY_EVENT",
       [](SarApp& a) { a.screens[0].code[0].actions.clear(); }},
      {"DUPLICATE_EVENT_HANDLER",
       [](SarApp& a) { a.screens[0].code.push_back(a.screens[0].code[0]); }},
      {"UNKNOWN_ACTION",
       [](SarApp& a) { a.screens[0].code[0].actions[0].action = "shout"; }},
      {"MISSING_ARGUMENT",
       [](SarApp& a) { a.screens[0].code[0].actions[0].values.clear(); }},
      {"UNKNOWN_PROPERTY",
       [](SarApp& a) {
         std::get<PropertyRef>(a.screens[0].code[0].actions[0].values[0].value)
             .property = "hint";
       }},
  };
  for (const auto& c : cases) {
    auto app = speak_it_app();
    c.mutate(app);
    const auto found = codes(app);
    EXPECT_EQ(found, std::vector<std::string>{c.code}) << c.code;
  }
}

TEST(Ast, ArgumentOrderIsInsignificant) {
  auto a = comp("ball", 1, {{"speed", LiteralRef{"number0"}},
                            {"color", LiteralRef{"string0"}}});
  auto b = comp("ball", 1, {{"color", LiteralRef{"string0"}},
                            {"speed", LiteralRef{"number0"}}});
  EXPECT_EQ(a, b);
}

TEST(Ast, Placeholders) {
  EXPECT_TRUE(is_placeholder("string0"));
  EXPECT_TRUE(is_placeholder("number12"));
  EXPECT_FALSE(is_placeholder("string"));
  EXPECT_FALSE(is_placeholder("string01"));
  EXPECT_FALSE(is_placeholder("String0"));
  EXPECT_FALSE(is_placeholder("text0"));
}

TEST(RoundTrip, RandomValidApps) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Rng rng({seed});
    const auto app = testing::random_app(rng);
    ASSERT_TRUE(validate(app).empty()) << seed;
    const auto text = serialize(app);
    const auto parsed = parse(text);
    EXPECT_EQ(parsed.app, app) << text;
    EXPECT_TRUE(parsed.literals.empty());
    EXPECT_EQ(serialize(parsed.app), text);
  }
}

}  // namespace
}  // namespace sar
