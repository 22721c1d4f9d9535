#include "sar/literals.hpp"

#include <gtest/gtest.h>

namespace sar {
namespace {

TEST(Extract, DoubleQuotes) {
  const auto r = extract_literals("a button named \"Speak\"");
  EXPECT_EQ(r.text, "a button named string0");
  EXPECT_EQ(r.dict, (LiteralDict{{"string0", "Speak"}}));
}

TEST(Extract, NoLiterals) {
  const auto r = extract_literals("make an app with a button");
  EXPECT_EQ(r.text, "make an app with a button");
  EXPECT_TRUE(r.dict.empty());
}

TEST(Extract, Numbers) {
  const auto r = extract_literals("set ball speed to 5");
  EXPECT_EQ(r.text, "set ball speed to number0");
  EXPECT_EQ(r.dict, (LiteralDict{{"number0", "5"}}));
  EXPECT_EQ(restore_literals(r.text, r.dict), "set ball speed to 5");
}

TEST(Extract, NumberKeepsPunctuationAndLexeme) {
  const auto r = extract_literals("radius 2.50, speed -3.");
  EXPECT_EQ(r.text, "radius number0, speed number1.");
  EXPECT_EQ(r.dict, (LiteralDict{{"number0", "2.50"}, {"number1", "-3"}}));
}

TEST(Extract, QuantitiesStay) {
  const auto r = extract_literals("an app with 2 buttons and 3 text boxes");
  EXPECT_EQ(r.text, "an app with 2 buttons and 3 text boxes");
  EXPECT_TRUE(r.dict.empty());
}

TEST(Extract, NumbersInsideQuotesStayStrings) {
  const auto r = extract_literals("a button named \"42\" and speed 7");
  EXPECT_EQ(r.text, "a button named string0 and speed number0");
  EXPECT_EQ(r.dict, (LiteralDict{{"string0", "42"}, {"number0", "7"}}));
}

TEST(Extract, SingleAndCurlyQuotes) {
  const auto r = extract_literals(
      "don't stop 'go now' and \xE2\x80\x9Chi\xE2\x80\x9D or "
      "\xE2\x80\x98it's\xE2\x80\x99");
  EXPECT_EQ(r.text, "don't stop string0 and string1 or string2");
  EXPECT_EQ(r.dict, (LiteralDict{{"string0", "go now"},
                                 {"string1", "hi"},
                                 {"string2", "it's"}}));
}

TEST(Extract, FilePathsAreStrings) {
  const auto r = extract_literals("a music player with source \"siren_sound.mp3\"");
  EXPECT_EQ(r.dict, (LiteralDict{{"string0", "siren_sound.mp3"}}));
}

TEST(Extract, UnbalancedQuote) {
  try {
    extract_literals("named \"Speak");
    FAIL();
  } catch (const UnbalancedQuote& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Extract, IdempotentOnTemplatedText) {
  const auto first = extract_literals("speak \"hi\" and set speed to 5");
  const auto second = extract_literals(first.text);
  EXPECT_EQ(second.text, first.text);
  EXPECT_TRUE(second.dict.empty());
}

TEST(Extract, ContinuesAfterExistingPlaceholders) {
  const auto r = extract_literals("a button named string0 and one named \"b\"");
  EXPECT_EQ(r.text, "a button named string0 and one named string1");
  EXPECT_EQ(r.dict, (LiteralDict{{"string1", "b"}}));
}

TEST(Restore, Substitutes) {
  EXPECT_EQ(restore_literals("say string0 now", {{"string0", "go"}}),
            "say \"go\" now");
  EXPECT_EQ(restore_literals("number0 string10", {{"number0", "5"},
                                                  {"string10", "x"}}),
            "5 \"x\"");
}

TEST(Restore, Missing) {
  try {
    restore_literals("say string3", {{"string0", "go"}});
    FAIL();
  } catch (const MissingLiteral& e) {
    EXPECT_EQ(e.placeholder(), "string3");
  }
}

TEST(Restore, RoundTripUpToQuotes) {
  for (const char* nl : {
           "Make an app with a button named 'Go', a ball with speed 12. "
           "When the button is clicked, set ball1 speed to 3.",
           "create an app with a label saying \xE2\x80\x9CHello there\xE2\x80\x9D",
           "nothing here",
       }) {
    const auto r = extract_literals(nl);
    EXPECT_EQ(strip_quotes(restore_literals(r.text, r.dict)), strip_quotes(nl));
  }
}

TEST(Dict, NextNameAndIntern) {
  LiteralDict d{{"string0", "a"}, {"string3", "b"}, {"number1", "4"}};
  EXPECT_EQ(d.next_name(LiteralFamily::kString), "string4");
  EXPECT_EQ(d.next_name(LiteralFamily::kNumber), "number2");
  EXPECT_EQ(d.intern(LiteralFamily::kString, "c"), "string4");
  EXPECT_EQ(d.at("string4"), "c");
  EXPECT_THROW(d.at("string9"), MissingLiteral);
}

TEST(Dict, SidecarRoundTrip) {
  LiteralDict d{{"string0", "tab\there"}, {"string1", "line\nbreak \\ done"},
                {"number0", "5"}};
  const auto text = to_sidecar(d);
  EXPECT_EQ(text.substr(0, 17), "string0\ttab\\there");
  EXPECT_EQ(from_sidecar(text), d);
  EXPECT_THROW(from_sidecar("nonsense\n"), ConfigError);
}

TEST(Dict, JsonRoundTrip) {
  LiteralDict d{{"string1", "b"}, {"string0", "a\"q"}};
  EXPECT_EQ(to_json(d), R"({"string1":"b","string0":"a\"q"})");
  EXPECT_EQ(dict_from_json(to_json(d)), d);
}

}  // namespace
}  // namespace sar
