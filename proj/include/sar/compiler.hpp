#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sar/ast.hpp"
#include "sar/catalog.hpp"
#include "sar/literals.hpp"
#include "sar/rng.hpp"
#include "sar/zip.hpp"

namespace sar {

// One designer component in a .scm file.
struct ScmComponent {
  std::string name;
  std::string type;
  std::string version;
  StringPairs properties;  // in emission order
  std::string uuid;
  std::vector<ScmComponent> children;
};

struct ScmDocument {
  std::string auth_url;
  std::string ya_version;
  std::string source = "Form";
  std::string form_name;
  std::string form_type;
  std::string form_version;
  std::optional<std::string> app_name;  // only on Screen1
  std::string title;
  std::string uuid = "0";
  std::vector<ScmComponent> components;

  // `#|\n$JSON\n{...}\n|#`
  std::string text() const;
};

struct XmlNode {
  std::string name;
  StringPairs attributes;
  std::string text;
  std::vector<XmlNode> children;

  // Attribute value, or "" when absent.
  std::string attribute(std::string_view key) const;
  const XmlNode* child(std::string_view name) const;
};

// Two-space indented XML; childless elements keep explicit closing tags.
std::string to_xml(const XmlNode& node);

struct BkyDocument {
  XmlNode root;

  std::string text() const { return to_xml(root); }
};

// Designer file for one screen. Component Uuids come from `rng`. Asset
// arguments are resolved against `assets_dir` when one is given.
ScmDocument emit_scm(const Screen& screen, int screen_number,
                     const LiteralDict& dict, std::string_view app_name,
                     Rng& rng, const Catalog& catalog = Catalog::builtin(),
                     const std::filesystem::path* assets_dir = nullptr);

// Blocks file for one screen; block ids come from `rng`.
BkyDocument emit_bky(const Screen& screen, const LiteralDict& dict, Rng& rng,
                     const Catalog& catalog = Catalog::builtin());

// The 20-character block id alphabet.
std::string_view block_id_alphabet();

// True when the value ends in a known audio, video or image extension.
bool is_media_file(std::string_view value);

// Exact file if present; otherwise the closest name of the same media
// family by case-insensitive edit distance, ties broken by name. Throws
// NoCandidate when the directory holds nothing compatible.
std::filesystem::path resolve_asset(std::string_view value,
                                    const std::filesystem::path& dir);

std::size_t edit_distance(std::string_view a, std::string_view b);

struct CompileOptions {
  std::string app_name = "speak_it";
  std::string user = "sar";
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> assets_dir;
};

struct CompiledScreen {
  std::string name;  // Screen1, Screen2, ...
  ScmDocument scm;
  BkyDocument bky;
};

struct CompiledApp {
  std::string app_name;
  std::string user;
  std::vector<CompiledScreen> screens;
  std::vector<std::filesystem::path> assets;
};

// Validates, then emits every screen. Screen i draws from independent
// streams Rng{seed, i, 0} (scm) and Rng{seed, i, 1} (bky).
CompiledApp compile(const SarApp& app, const LiteralDict& dict,
                    const CompileOptions& options,
                    const Catalog& catalog = Catalog::builtin());

std::string project_properties(std::string_view app_name,
                               std::string_view user);

// Archive entries in their fixed order.
std::vector<ZipEntry> aia_entries(const CompiledApp& compiled);

// Compiles and writes the .aia archive to `out`. Throws IoError.
CompiledApp package_aia(const SarApp& app, const LiteralDict& dict,
                        const CompileOptions& options,
                        const std::filesystem::path& out,
                        const Catalog& catalog = Catalog::builtin());

}  // namespace sar
