// sarc: command-line driver for the SAR toolchain.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sar/compiler.hpp"
#include "sar/nl_frontend.hpp"
#include "sar/parser.hpp"
#include "sar/simulator.hpp"
#include "sar/synthesizer.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool g_json = false;

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sar::IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw sar::IoError("cannot write " + path);
}

Json diagnostics_json(const std::vector<sar::Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    out.push_back({{"code", d.code}, {"message", d.message}, {"path", d.path}});
  }
  return out;
}

int report(const sar::Error& e) {
  std::vector<sar::Diagnostic> diagnostics;
  if (const auto* v = dynamic_cast<const sar::InvariantViolation*>(&e)) {
    diagnostics = v->diagnostics();
  }
  if (g_json) {
    Json out{{"ok", false}, {"code", e.code()}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const sar::SyntaxError*>(&e)) {
      out["span"] = {s->span().begin, s->span().end};
    }
    out["diagnostics"] = diagnostics_json(diagnostics);
    std::cout << out.dump() << "\n";
  } else {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    for (const auto& d : diagnostics) std::cerr << "  " << sar::to_string(d) << "\n";
  }
  return kFailed;
}

// SAR file plus its literal bindings: raw words interned by the parser,
// then the sidecar (explicit, or <sar>.literals when present).
sar::ParseResult load_sar(const std::string& path, const std::string& literals) {
  sar::LiteralDict dict;
  std::string sidecar = literals;
  if (sidecar.empty() && path != "-" && fs::exists(path + ".literals")) {
    sidecar = path + ".literals";
  }
  if (!sidecar.empty()) dict = sar::from_sidecar(read_text(sidecar));
  return sar::parse(read_text(path), sar::Catalog::builtin(), dict);
}

std::optional<fs::path> assets_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("SARC_ASSETS_DIR"); env != nullptr && *env) {
    return fs::path(env);
  }
  return std::nullopt;
}

int cmd_parse(const std::string& file) {
  const auto parsed = sar::parse(read_text(file));
  const auto diagnostics = sar::validate(parsed.app);
  if (g_json) {
    std::cout << Json{{"ok", diagnostics.empty()},
                      {"sar", diagnostics.empty() ? sar::serialize(parsed.app) : ""},
                      {"diagnostics", diagnostics_json(diagnostics)}}
                     .dump()
              << "\n";
  } else {
    for (const auto& d : diagnostics) std::cerr << sar::to_string(d) << "\n";
    if (diagnostics.empty()) std::cout << sar::serialize(parsed.app) << "\n";
  }
  return diagnostics.empty() ? kOk : kFailed;
}

struct CompileArgs {
  std::string sar;
  std::string literals;
  std::string name = "speak_it";
  std::uint64_t seed = 0;
  std::string assets;
  std::string out;
  std::string corpus;
};

int cmd_compile(const CompileArgs& a) {
  sar::CompileOptions options;
  options.app_name = a.name;
  options.seed = a.seed;
  options.assets_dir = assets_dir(a.assets);
  if (!a.corpus.empty()) {
    // One archive per corpus line, named after the line number.
    fs::create_directories(a.out);
    std::size_t failures = 0;
    const auto corpus = sar::read_corpus(read_text(a.corpus));
    for (const auto& e : corpus) {
      try {
        auto parsed = sar::parse(e.sar, sar::Catalog::builtin(), e.dict);
        auto opts = options;
        opts.app_name = a.name + std::to_string(e.index);
        sar::package_aia(parsed.app, parsed.literals, opts,
                         fs::path(a.out) / (opts.app_name + ".aia"));
      } catch (const sar::Error& err) {
        ++failures;
        std::cerr << "line " << e.index + 1 << ": " << err.code() << ": "
                  << err.what() << "\n";
      }
    }
    std::cerr << corpus.size() - failures << "/" << corpus.size() << " compiled\n";
    return failures == 0 ? kOk : kFailed;
  }
  const auto parsed = load_sar(a.sar, a.literals);
  sar::package_aia(parsed.app, parsed.literals, options, a.out);
  if (g_json) std::cout << Json{{"ok", true}, {"out", a.out}}.dump() << "\n";
  return kOk;
}

struct NlArgs {
  std::string file;
  std::string out;
  std::string literals;
  std::string corpus;
};

int cmd_nl2sar(const NlArgs& a) {
  if (!a.corpus.empty()) {
    // Translates the NL column; output lines carry the predicted SAR.
    std::string out;
    std::size_t failures = 0;
    for (auto e : sar::read_corpus(read_text(a.corpus))) {
      try {
        auto r = sar::nl_to_sar(e.nl, e.dict);
        e.sar = r.sar;
        e.dict = r.dict;
        out += sar::to_corpus_line(e) + "\n";
      } catch (const sar::Error& err) {
        ++failures;
        std::cerr << "line " << e.index + 1 << ": " << err.code() << ": "
                  << err.what() << "\n";
      }
    }
    write_text(a.out, out);
    return failures == 0 ? kOk : kFailed;
  }
  const auto result = sar::nl_to_sar(read_text(a.file));
  for (const auto& u : result.report.unmatched) std::cerr << "unmatched: " << u << "\n";
  for (const auto& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
  std::string sidecar = a.literals;
  if (sidecar.empty() && !a.out.empty() && a.out != "-") sidecar = a.out + ".literals";
  if (!sidecar.empty()) write_text(sidecar, sar::to_sidecar(result.dict));
  if (g_json) {
    Json literals = Json::object();
    for (const auto& [k, v] : result.dict.entries()) literals[k] = v;
    std::cout << Json{{"ok", true},
                      {"sar", result.sar},
                      {"literals", literals},
                      {"unmatched", result.report.unmatched},
                      {"warnings", result.report.warnings}}
                     .dump()
              << "\n";
    if (!a.out.empty() && a.out != "-") write_text(a.out, result.sar + "\n");
  } else {
    write_text(a.out, result.sar + "\n");
  }
  return kOk;
}

struct SynthArgs {
  std::string config;
  std::size_t count = 0;
  std::string out;
  std::optional<std::uint64_t> seed;
};

int cmd_synth(const SynthArgs& a) {
  sar::SynthConfig config;
  if (!a.config.empty()) config = sar::synth_config_from_json(read_text(a.config));
  if (a.seed) config.seed = *a.seed;
  write_text(a.out, sar::write_corpus(sar::synthesize(config, a.count)));
  return kOk;
}

struct MutateArgs {
  double rate = 0;
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_mutate(const MutateArgs& a) {
  if (!(a.rate >= 0 && a.rate <= 1)) throw sar::ConfigError("rate must lie in [0, 1]");
  auto corpus = sar::read_corpus(read_text(a.in));
  for (auto& e : corpus) {
    sar::Rng rng{a.seed, e.index, 1};
    e.nl = sar::mutate(e.nl, a.rate, sar::Lexicon::builtin(), rng);
  }
  write_text(a.out, sar::write_corpus(corpus));
  return kOk;
}

struct SplitArgs {
  std::string ratios = "8:1:1";
  std::string in;
  std::string prefix = "split";
  std::uint64_t seed = 0;
};

int cmd_split(const SplitArgs& a) {
  const auto parts = sar::split(sar::read_corpus(read_text(a.in)),
                                sar::parse_ratios(a.ratios), a.seed);
  write_text(a.prefix + ".train", sar::write_corpus(parts.train));
  write_text(a.prefix + ".valid", sar::write_corpus(parts.valid));
  write_text(a.prefix + ".test", sar::write_corpus(parts.test));
  if (g_json) {
    std::cout << Json{{"ok", true},
                      {"train", parts.train.size()},
                      {"valid", parts.valid.size()},
                      {"test", parts.test.size()}}
                     .dump()
              << "\n";
  } else {
    std::cerr << parts.train.size() << "/" << parts.valid.size() << "/"
              << parts.test.size() << "\n";
  }
  return kOk;
}

int cmd_simulate(const std::string& sar_file, const std::string& literals,
                 const std::string& script) {
  const auto parsed = load_sar(sar_file, literals);
  auto state = sar::AppState::init(parsed.app, parsed.literals);
  const auto effects = sar::run_script(state, read_text(script));
  if (g_json) {
    std::cout << Json{{"ok", true}, {"effects", effects}}.dump() << "\n";
  } else {
    for (const auto& e : effects) std::cout << e << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAR toolchain: parse, compile, translate, synthesize, simulate"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output on stdout");

  std::string parse_file;
  auto* parse = app.add_subcommand("parse", "Validate a SAR file");
  parse->add_option("file", parse_file, "SAR file ('-' for stdin)")->required();

  CompileArgs compile_args;
  auto* compile = app.add_subcommand("compile", "Compile SAR to an .aia archive");
  compile->add_option("sar", compile_args.sar, "SAR file ('-' for stdin)");
  compile->add_option("--literals", compile_args.literals, "Literal sidecar file");
  compile->add_option("--name", compile_args.name, "App name");
  compile->add_option("--seed", compile_args.seed, "Seed for Uuids and block ids");
  compile->add_option("--assets", compile_args.assets,
                      "Media directory (default: $SARC_ASSETS_DIR)");
  compile->add_option("--corpus", compile_args.corpus,
                      "Compile every line of a corpus; -o names a directory");
  compile->add_option("-o,--out", compile_args.out, "Output .aia")->required();

  NlArgs nl_args;
  auto* nl2sar = app.add_subcommand("nl2sar", "Translate a description to SAR");
  nl2sar->add_option("file", nl_args.file, "NL file (default: stdin)");
  nl2sar->add_option("-o,--out", nl_args.out, "SAR output (default: stdout)");
  nl2sar->add_option("--literals", nl_args.literals,
                     "Sidecar output (default: <out>.literals)");
  nl2sar->add_option("--corpus", nl_args.corpus,
                     "Translate the NL column of a corpus file");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Synthesize a parallel corpus");
  synth->add_option("--config", synth_args.config, "JSON config file");
  synth->add_option("-n,--count", synth_args.count, "Number of examples");
  synth->add_option("-o,--out", synth_args.out, "Corpus output (default: stdout)");
  synth->add_option("--seed", synth_args.seed, "Overrides the config seed");
  MutateArgs mutate_args;
  auto* mutate = synth->add_subcommand("mutate", "Mutate the NL column of a corpus");
  mutate->add_option("--rate", mutate_args.rate, "Fraction of words to replace")
      ->required();
  mutate->add_option("-i,--in", mutate_args.in, "Corpus input (default: stdin)");
  mutate->add_option("-o,--out", mutate_args.out, "Corpus output (default: stdout)");
  mutate->add_option("--seed", mutate_args.seed, "Mutation seed");

  SplitArgs split_args;
  auto* split = app.add_subcommand("split", "Split a corpus into train/valid/test");
  split->add_option("ratios_pos", split_args.ratios, "Ratios such as 8:1:1");
  split->add_option("--ratios", split_args.ratios, "Ratios such as 8:1:1");
  split->add_option("-i,--in", split_args.in, "Corpus input (default: stdin)");
  split->add_option("--prefix", split_args.prefix,
                    "Writes <prefix>.train, <prefix>.valid, <prefix>.test");
  split->add_option("--seed", split_args.seed, "Shuffle seed");

  std::string sim_sar;
  std::string sim_literals;
  std::string sim_script;
  auto* simulate = app.add_subcommand("simulate", "Run a set/fire script against an app");
  simulate->add_option("sar", sim_sar, "SAR file")->required();
  simulate->add_option("--literals", sim_literals, "Literal sidecar file");
  simulate->add_option("--script", sim_script, "Script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(parse_file);
    if (*compile) {
      if (compile_args.sar.empty() == compile_args.corpus.empty()) {
        std::cerr << "compile: give either a SAR file or --corpus\n";
        return kUsage;
      }
      return cmd_compile(compile_args);
    }
    if (*nl2sar) return cmd_nl2sar(nl_args);
    if (*mutate) return cmd_mutate(mutate_args);
    if (*synth) return cmd_synth(synth_args);
    if (*split) return cmd_split(split_args);
    if (*simulate) return cmd_simulate(sim_sar, sim_literals, sim_script);
  } catch (const sar::Error& e) {
    return report(e);
  }
  return kUsage;
}
