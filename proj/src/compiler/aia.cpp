#include <fstream>
#include <set>

#include "sar/compiler.hpp"

namespace sar {

namespace {

std::string source_dir(const CompiledApp& compiled) {
  return "src/appinventor/ai_" + compiled.user + "/" + compiled.app_name + "/";
}

}  // namespace

CompiledApp compile(const SarApp& app, const LiteralDict& dict,
                    const CompileOptions& options, const Catalog& catalog) {
  check_valid(app, catalog);
  CompiledApp out;
  out.app_name = options.app_name;
  out.user = options.user;
  const std::filesystem::path* assets =
      options.assets_dir ? &*options.assets_dir : nullptr;
  std::set<std::filesystem::path> referenced;
  for (std::size_t i = 0; i < app.screens.size(); ++i) {
    const auto& screen = app.screens[i];
    const int number = static_cast<int>(i) + 1;
    Rng scm_rng({options.seed, i, 0});
    Rng bky_rng({options.seed, i, 1});
    CompiledScreen compiled;
    compiled.name = "Screen" + std::to_string(number);
    compiled.scm = emit_scm(screen, number, dict, options.app_name, scm_rng,
                            catalog, assets);
    compiled.bky = emit_bky(screen, dict, bky_rng, catalog);
    out.screens.push_back(std::move(compiled));
    if (assets == nullptr) continue;
    for (const auto& comp : screen.components) {
      const auto& entry = catalog.lookup(comp.kind);
      for (const auto& arg : comp.args) {
        const auto* spec = entry.find_arg(arg.name);
        const auto& raw = dict.at(std::get<LiteralRef>(arg.value).placeholder);
        if (spec->asset && is_media_file(raw)) {
          referenced.insert(resolve_asset(raw, *assets));
        }
      }
    }
  }
  out.assets.assign(referenced.begin(), referenced.end());
  return out;
}

std::string project_properties(std::string_view app_name,
                               std::string_view user) {
  const std::string name(app_name);
  return "main=appinventor.ai_" + std::string(user) + "." + name +
         ".Screen1\n"
         "name=" + name + "\n"
         "assets=../assets\n"
         "source=../src\n"
         "build=../build\n"
         "versioncode=1\n"
         "versionname=1.0\n"
         "useslocation=False\n"
         "aname=" + name + "\n"
         "sizing=Responsive\n"
         "showlistsasjson=True\n"
         "tutorialurl=\n"
         "subsetjson=\n"
         "actionbar=True\n"
         "theme=Classic\n"
         "color.primary=&HFF3F51B5\n"
         "color.primary.dark=&HFF303F9F\n"
         "color.accent=&HFFFF4081\n";
}

std::vector<ZipEntry> aia_entries(const CompiledApp& compiled) {
  std::vector<ZipEntry> entries;
  entries.push_back({"youngandroidproject/project.properties",
                     project_properties(compiled.app_name, compiled.user)});
  const auto dir = source_dir(compiled);
  for (const auto& screen : compiled.screens) {
    entries.push_back({dir + screen.name + ".scm", screen.scm.text()});
    entries.push_back({dir + screen.name + ".bky", screen.bky.text()});
  }
  for (const auto& path : compiled.assets) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read asset " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    entries.push_back({"assets/" + path.filename().string(), std::move(data)});
  }
  return entries;
}

CompiledApp package_aia(const SarApp& app, const LiteralDict& dict,
                        const CompileOptions& options,
                        const std::filesystem::path& out,
                        const Catalog& catalog) {
  auto compiled = compile(app, dict, options, catalog);
  const auto bytes = write_zip(aia_entries(compiled));
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + out.string());
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw IoError("write failed for " + out.string());
  return compiled;
}

}  // namespace sar
