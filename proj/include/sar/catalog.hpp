#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sar {

using StringPairs = std::vector<std::pair<std::string, std::string>>;

enum class ArgType { kString, kNumber, kColor };

// One designer property settable from SAR, e.g. a button's text.
struct ArgSpec {
  std::string name;
  ArgType type = ArgType::kString;
  std::string default_value;  // may contain "{instance}"
  std::string property;       // App Inventor designer property
  bool emit_default = false;
  bool asset = false;  // value names a media file

  std::string default_for(std::string_view instance_name) const;
};

struct EventSpec {
  std::string name;
  std::string token;
  std::vector<std::string> aliases;
  std::string block_event;
  std::string toggles;  // state key flipped before the handler runs
};

// What kind of value an action parameter accepts.
enum class ValueKind { kString, kNumber, kColor, kProperty };

struct ParamSpec {
  std::string name;
  std::string socket;
  std::vector<ValueKind> accepts;

  bool accepts_kind(ValueKind kind) const;
};

enum class BlockKind { kMethod, kSetter };

// A fixed block plugged into a method socket, independent of SAR input.
struct ConstantArg {
  std::string socket;
  std::string block;
  std::string value;
};

struct EffectSpec {
  std::string name;
  bool component = false;   // effect names the target instance
  std::string value_param;  // effect carries this parameter's value
};

struct ActionSpec {
  std::string name;
  std::string token;
  std::vector<std::string> aliases;
  BlockKind block = BlockKind::kMethod;
  std::string member;
  std::vector<ParamSpec> params;
  std::vector<ConstantArg> constants;
  EffectSpec effect;
  // state key -> parameter name, or "=literal" for a constant.
  StringPairs sets;
  std::string increments;

  // Bare tokens (e.g. "speak") name the action without an instance and
  // always target instance 1 of a singleton kind.
  bool bare_token() const;
  const ParamSpec* find_param(std::string_view param) const;
};

struct PropertySpec {
  std::string name;
  std::string member;
};

// Designer container some components must live in (a Ball needs a Canvas).
struct ContainerSpec {
  std::string type;
  std::string version;
  StringPairs properties;
};

struct CatalogEntry {
  std::string kind;
  std::string type;
  std::string version;
  bool visible = true;
  bool singleton = false;
  std::optional<ContainerSpec> container;
  std::vector<ArgSpec> args;
  StringPairs state;
  std::vector<EventSpec> events;
  std::vector<ActionSpec> actions;
  std::vector<PropertySpec> properties;

  const ArgSpec* find_arg(std::string_view name) const;
  const EventSpec* find_event(std::string_view name) const;
  const ActionSpec* find_action(std::string_view name) const;
  const PropertySpec* find_property(std::string_view name) const;

  // "TextBox1", "TextToSpeech1", ...
  std::string instance_name(int index) const;
};

struct ColorSpec {
  std::string name;
  std::string block;
  std::string hex;
  std::string argb;
};

struct DefaultArg {
  std::string name;
  std::string value;

  bool operator==(const DefaultArg&) const = default;
};

// Expands a token pattern for one instance: "{inst}_clicked" with
// ("button", 1) gives "button1_clicked".
std::string render_pattern(std::string_view pattern, std::string_view kind,
                           int index);

// Inverse of render_pattern. Returns the instance index when `tag`
// matches; patterns without an index yield 1.
std::optional<int> match_pattern(std::string_view pattern,
                                 std::string_view kind, std::string_view tag);

class Catalog {
 public:
  // The manifest bundled with the build.
  static const Catalog& builtin();
  static Catalog from_json(std::string_view text);
  static Catalog load(const std::filesystem::path& path);

  const CatalogEntry& lookup(std::string_view kind) const;
  const CatalogEntry* find(std::string_view kind) const;
  std::vector<DefaultArg> default_args(std::string_view kind,
                                       int index = 1) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::vector<ColorSpec>& colors() const { return colors_; }
  const ColorSpec* find_color(std::string_view name) const;

  // Union of argument and parameter names; these double as SAR tags.
  const std::vector<std::string>& arg_names() const { return arg_names_; }
  bool is_arg_name(std::string_view name) const;

  const std::string& ya_version() const { return ya_version_; }
  const std::string& language_version() const { return language_version_; }
  const std::string& auth_url() const { return auth_url_; }
  const std::string& form_type() const { return form_type_; }
  const std::string& form_version() const { return form_version_; }

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<ColorSpec> colors_;
  std::vector<std::string> arg_names_;
  std::string ya_version_;
  std::string language_version_;
  std::string auth_url_;
  std::string form_type_;
  std::string form_version_;
};

}  // namespace sar
