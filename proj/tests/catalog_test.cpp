#include "sar/catalog.hpp"

#include <gtest/gtest.h>

#include <set>

#include "sar/errors.hpp"

namespace sar {
namespace {

TEST(Catalog, HasTheTwelveKinds) {
  std::set<std::string> kinds;
  for (const auto& e : Catalog::builtin().entries()) kinds.insert(e.kind);
  const std::set<std::string> expected = {
      "camera", "textbox", "button", "text2speech", "ball", "accelerometer",
      "video_player", "switch", "player", "label", "timepicker",
      "passwordtextbox"};
  EXPECT_EQ(kinds, expected);
}

TEST(Catalog, EventsAreExactlyTheFour) {
  std::set<std::string> events;
  for (const auto& e : Catalog::builtin().entries()) {
    for (const auto& ev : e.events) events.insert(e.kind + "." + ev.name);
  }
  const std::set<std::string> expected = {"button.clicked", "switch.flipped",
                                          "accelerometer.shaken", "ball.flung"};
  EXPECT_EQ(events, expected);
}

TEST(Catalog, RequiredActionsPresent) {
  const auto& c = Catalog::builtin();
  EXPECT_NE(c.lookup("camera").find_action("take_picture"), nullptr);
  EXPECT_NE(c.lookup("video_player").find_action("start"), nullptr);
  EXPECT_NE(c.lookup("video_player").find_action("stop"), nullptr);
  EXPECT_NE(c.lookup("player").find_action("start"), nullptr);
  EXPECT_NE(c.lookup("player").find_action("stop"), nullptr);
  EXPECT_NE(c.lookup("ball").find_action("bounce"), nullptr);
  EXPECT_NE(c.lookup("ball").find_action("speed"), nullptr);
  EXPECT_NE(c.lookup("ball").find_action("color"), nullptr);
  EXPECT_NE(c.lookup("label").find_action("settext"), nullptr);
  const auto* speak = c.lookup("text2speech").find_action("speak");
  ASSERT_NE(speak, nullptr);
  const auto* message = speak->find_param("message");
  ASSERT_NE(message, nullptr);
  EXPECT_TRUE(message->accepts_kind(ValueKind::kString));
  EXPECT_TRUE(message->accepts_kind(ValueKind::kProperty));
  std::size_t actions = 0;
  for (const auto& e : c.entries()) actions += e.actions.size();
  EXPECT_GT(actions, 10u);
}

TEST(Catalog, LookupText2Speech) {
  const auto& e = Catalog::builtin().lookup("text2speech");
  EXPECT_TRUE(e.singleton);
  EXPECT_FALSE(e.visible);
  EXPECT_NE(e.find_action("speak"), nullptr);
}

TEST(Catalog, LookupButton) {
  const auto& e = Catalog::builtin().lookup("button");
  EXPECT_FALSE(e.singleton);
  EXPECT_NE(e.find_event("clicked"), nullptr);
  ASSERT_NE(e.find_arg("text"), nullptr);
  EXPECT_EQ(e.find_arg("text")->default_value, "Button");
}

TEST(Catalog, LookupUnknownThrows) {
  EXPECT_THROW(Catalog::builtin().lookup("spreadsheet"), NotFound);
}

TEST(Catalog, DefaultArgs) {
  const auto& c = Catalog::builtin();
  EXPECT_EQ(c.default_args("textbox"),
            (std::vector<DefaultArg>{{"hint", "Hint for TextBox1"}}));
  EXPECT_EQ(c.default_args("textbox", 2),
            (std::vector<DefaultArg>{{"hint", "Hint for TextBox2"}}));
  EXPECT_EQ(c.default_args("ball"),
            (std::vector<DefaultArg>{
                {"color", "red"}, {"speed", "5"}, {"radius", "10"}}));
  EXPECT_EQ(c.default_args("player"),
            (std::vector<DefaultArg>{{"source", ""}}));
  EXPECT_TRUE(c.default_args("camera").empty());
  EXPECT_THROW(c.default_args("spreadsheet"), NotFound);
}

TEST(Catalog, PinnedVersions) {
  const auto& c = Catalog::builtin();
  EXPECT_EQ(c.lookup("textbox").version, "6");
  EXPECT_EQ(c.lookup("button").version, "6");
  EXPECT_EQ(c.lookup("text2speech").version, "5");
  EXPECT_EQ(c.ya_version(), "208");
  EXPECT_EQ(c.language_version(), "33");
  EXPECT_EQ(c.form_version(), "27");
}

TEST(Catalog, Patterns) {
  EXPECT_EQ(render_pattern("{inst}_clicked", "button", 2), "button2_clicked");
  EXPECT_EQ(match_pattern("{inst}_clicked", "button", "button2_clicked"), 2);
  EXPECT_EQ(match_pattern("{inst}clicked", "button", "button12clicked"), 12);
  EXPECT_EQ(match_pattern("{kind}text{n}", "textbox", "textboxtext1"), 1);
  EXPECT_EQ(match_pattern("speak", "text2speech", "speak"), 1);
  EXPECT_FALSE(match_pattern("{inst}_clicked", "button", "button0_clicked"));
  EXPECT_FALSE(match_pattern("{inst}_clicked", "button", "button01_clicked"));
  EXPECT_FALSE(match_pattern("{inst}_clicked", "button", "button_clicked"));
  EXPECT_FALSE(match_pattern("{inst}", "label", "label1text"));
}

TEST(Catalog, CapabilityClosure) {
  // Every parameter a setter or effect names resolves to a declared slot.
  for (const auto& e : Catalog::builtin().entries()) {
    for (const auto& a : e.actions) {
      if (!a.effect.value_param.empty()) {
        EXPECT_NE(a.find_param(a.effect.value_param), nullptr) << e.kind;
      }
      for (const auto& [key, source] : a.sets) {
        if (source[0] != '=') EXPECT_NE(a.find_param(source), nullptr);
      }
      if (a.block == BlockKind::kSetter) EXPECT_EQ(a.params.size(), 1u);
      if (a.bare_token()) EXPECT_TRUE(e.singleton) << e.kind;
    }
  }
}

TEST(Catalog, RejectsCollidingArgName) {
  const std::string manifest = R"({
    "ya_version": "208", "language_version": "33", "auth_url": "x",
    "form": {"type": "Form", "version": "27"},
    "components": [
      {"kind": "button", "type": "Button", "version": "6",
       "args": [{"name": "button", "type": "string", "property": "Text"}]}
    ]})";
  EXPECT_THROW(Catalog::from_json(manifest), ConfigError);
  EXPECT_THROW(Catalog::from_json("{"), ConfigError);
}

TEST(Catalog, LoadFromFile) {
  auto c = Catalog::load(SAR_SOURCE_DIR "/data/catalog.json");
  EXPECT_EQ(c.entries().size(), Catalog::builtin().entries().size());
  EXPECT_THROW(Catalog::load("/nonexistent/catalog.json"), IoError);
}

}  // namespace
}  // namespace sar
