#include "sar/synthesizer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "json.hpp"

namespace sar {

namespace {

constexpr char kOpen = '\x01';
constexpr char kClose = '\x02';

std::string replace_all(std::string text, std::string_view from,
                        std::string_view to) {
  for (std::size_t pos = 0;
       (pos = text.find(from, pos)) != std::string::npos; pos += to.size()) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

bool starts_with_vowel(std::string_view word) {
  return !word.empty() &&
         std::string_view("aeiou").find(static_cast<char>(
             std::tolower(static_cast<unsigned char>(word[0])))) !=
             std::string_view::npos;
}

std::string capitalize(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  }
  return text;
}

std::string lowercase_first(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  }
  return text;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1]");
  }
}

std::vector<const CatalogEntry*> eligible_kinds(const SynthConfig& config,
                                                const Catalog& catalog) {
  std::vector<const CatalogEntry*> out;
  if (config.kinds.empty()) {
    for (const auto& e : catalog.entries()) out.push_back(&e);
    return out;
  }
  for (const auto& kind : config.kinds) {
    const auto* entry = catalog.find(kind);
    if (entry == nullptr) throw ConfigError("unknown component kind '" + kind + "'");
    if (std::find(out.begin(), out.end(), entry) == out.end()) out.push_back(entry);
  }
  return out;
}

int capacity(const CatalogEntry& entry, const SynthConfig& config) {
  return entry.singleton ? 1 : config.max_repeats;
}

void check_config(const SynthConfig& config, const Catalog& catalog) {
  check_probability(config.event_probability, "event_probability");
  check_probability(config.arg_probability, "arg_probability");
  check_probability(config.property_probability, "property_probability");
  check_probability(config.group_probability, "group_probability");
  check_probability(config.mutation_rate, "mutation_rate");
  if (config.min_components < 0 || config.max_components < 0 ||
      config.max_repeats < 0 || config.max_events < 0 ||
      config.max_actions < 1) {
    throw ConfigError("counts must be non-negative and max_actions positive");
  }
  if (config.min_components > config.max_components) {
    throw ConfigError("component count range is empty");
  }
  int total = 0;
  for (const auto* entry : eligible_kinds(config, catalog)) {
    total += capacity(*entry, config);
  }
  if (total < config.min_components) {
    throw ConfigError("at most " + std::to_string(total) +
                      " components can be sampled, fewer than min_components");
  }
}

// Samples one plan and renders it. Literal values are first written as
// \x01<slot>\x02 markers and named by order of appearance at the end.
class ExampleBuilder {
 public:
  ExampleBuilder(const SynthConfig& config, const Catalog& catalog,
                 const Snippets& snippets, Rng& rng)
      : config_(config), catalog_(catalog), snippets_(snippets), rng_(rng) {}

  ParallelExample build() {
    sample_components();
    sample_code();
    std::string nl = render_components();
    for (const auto& block : screen_.code) nl += " " + render_block(block);
    return finish(std::move(nl));
  }

 private:
  struct Slot {
    LiteralFamily family;
    std::string value;
  };

  std::string slot(LiteralFamily family, const std::string& pool_key) {
    const auto* pool = snippets_.literal_values(pool_key);
    if (pool == nullptr || pool->empty()) {
      throw ConfigError("no literal values for " + pool_key);
    }
    slots_.push_back({family, rng_.pick(*pool)});
    return std::string(1, kOpen) + std::to_string(slots_.size() - 1) + kClose;
  }

  void sample_components() {
    const auto kinds = eligible_kinds(config_, catalog_);
    int total = 0;
    for (const auto* entry : kinds) total += capacity(*entry, config_);
    const int hi = std::min(config_.max_components, total);
    std::vector<double> weights;
    for (int n = config_.min_components; n <= hi; ++n) {
      weights.push_back(n == 0 ? 1.0 : static_cast<double>(n) * n);
    }
    const int n = config_.min_components +
                  static_cast<int>(rng_.weighted(weights));
    for (int i = 0; i < n; ++i) {
      std::vector<const CatalogEntry*> open;
      for (const auto* entry : kinds) {
        if (counts_[entry->kind] < capacity(*entry, config_)) open.push_back(entry);
      }
      const auto* entry = rng_.pick(open);
      ComponentInst comp{entry->kind, ++counts_[entry->kind], {}};
      for (const auto& arg : entry->args) {
        if (!rng_.chance(config_.arg_probability)) continue;
        const auto family = arg.type == ArgType::kNumber ? LiteralFamily::kNumber
                                                         : LiteralFamily::kString;
        comp.args.push_back(
            {arg.name, LiteralRef{slot(family, entry->kind + "." + arg.name)}});
      }
      rng_.shuffle(comp.args.begin(), comp.args.end());
      screen_.components.push_back(std::move(comp));
    }
  }

  void sample_code() {
    std::vector<EventRef> sources;
    std::vector<ComponentRef> targets;
    std::vector<PropertyRef> properties;
    for (const auto& comp : screen_.components) {
      const auto& entry = catalog_.lookup(comp.kind);
      for (const auto& e : entry.events) sources.push_back({comp.ref(), e.name});
      if (!entry.actions.empty()) targets.push_back(comp.ref());
      for (const auto& p : entry.properties) {
        properties.push_back({comp.ref(), p.name});
      }
    }
    if (sources.empty() || targets.empty() || config_.max_events == 0 ||
        !rng_.chance(config_.event_probability)) {
      return;
    }
    rng_.shuffle(sources.begin(), sources.end());
    std::size_t events = 1;
    const auto max_events = std::min<std::size_t>(
        sources.size(), static_cast<std::size_t>(config_.max_events));
    while (events < max_events && rng_.chance(0.3)) ++events;
    for (std::size_t e = 0; e < events; ++e) {
      EventBlock block{sources[e], {}};
      const auto actions = rng_.between(1, config_.max_actions);
      for (std::int64_t a = 0; a < actions; ++a) {
        const auto target = rng_.pick(targets);
        const auto& entry = catalog_.lookup(target.kind);
        const auto& spec = entry.actions[rng_.below(entry.actions.size())];
        ActionInst action{spec.name, target, {}};
        for (const auto& param : spec.params) {
          if (param.accepts_kind(ValueKind::kProperty) && !properties.empty() &&
              rng_.chance(config_.property_probability)) {
            action.values.push_back({param.name, rng_.pick(properties)});
            continue;
          }
          const bool text = param.accepts_kind(ValueKind::kString) ||
                            param.accepts_kind(ValueKind::kColor);
          const auto family = text ? LiteralFamily::kString : LiteralFamily::kNumber;
          action.values.push_back(
              {param.name,
               LiteralRef{slot(family, target.kind + "." + spec.name + "." +
                                           param.name)}});
        }
        block.actions.push_back(std::move(action));
      }
      screen_.code.push_back(std::move(block));
    }
  }

  std::string article(const std::string& noun) {
    return starts_with_vowel(noun) ? "an " + noun : "a " + noun;
  }

  std::string render_item(const ComponentInst& comp) {
    const auto& phrases = snippets_.component(comp.kind);
    std::string out = article(rng_.pick(phrases.nouns));
    for (std::size_t i = 0; i < comp.args.size(); ++i) {
      const auto& arg = comp.args[i];
      const auto& templates = phrases.find_arg(arg.name)->phrases;
      out += i == 0 ? " " : " and ";
      out += replace_all(rng_.pick(templates), "{value}",
                         std::get<LiteralRef>(arg.value).placeholder);
    }
    return out;
  }

  std::string render_components() {
    std::vector<std::string> items;
    const auto& comps = screen_.components;
    for (std::size_t i = 0; i < comps.size();) {
      std::size_t run = 1;
      while (i + run < comps.size() && comps[i + run].kind == comps[i].kind &&
             comps[i + run].args.empty() && comps[i].args.empty()) {
        ++run;
      }
      std::vector<std::string> words;
      for (const auto& [word, value] : snippets_.quantities()) {
        if (value == static_cast<int>(run)) words.push_back(word);
      }
      if (run > 1 && !words.empty() && rng_.chance(config_.group_probability)) {
        const auto& noun = rng_.pick(snippets_.component(comps[i].kind).nouns);
        const auto space = noun.rfind(' ');
        const auto head = space == std::string::npos ? 0 : space + 1;
        items.push_back(rng_.pick(words) + " " + noun.substr(0, head) +
                        plural(noun.substr(head)));
        i += run;
      } else {
        items.push_back(render_item(comps[i]));
        ++i;
      }
    }
    std::string list = items.empty() ? "" : items[0];
    static const std::vector<std::string> kLast = {", and ", " and ", ", "};
    for (std::size_t i = 1; i < items.size(); ++i) {
      list += (i + 1 == items.size() ? rng_.pick(kLast) : std::string(", ")) +
              items[i];
    }
    std::string intro = rng_.pick(snippets_.intros());
    if (rng_.chance(0.2)) intro = lowercase_first(intro);
    return intro + " " + list + ".";
  }

  std::string reference(const ComponentRef& ref, bool subject) {
    const auto& phrases = snippets_.component(ref.kind);
    std::vector<std::string> nouns = phrases.nouns;
    if (subject) {
      nouns.insert(nouns.end(), phrases.event_subjects.begin(),
                   phrases.event_subjects.end());
    }
    std::string out;
    if (subject || rng_.chance(0.8)) out = "the ";
    if (counts_[ref.kind] > 1) {
      out += snippets_.ordinals().at(static_cast<std::size_t>(ref.index - 1)) + " ";
    }
    return out + rng_.pick(nouns);
  }

  std::string render_value(const ValueRef& value) {
    if (const auto* lit = std::get_if<LiteralRef>(&value)) return lit->placeholder;
    const auto& prop = std::get<PropertyRef>(value);
    const auto* set = snippets_.find_property(prop.component.kind, prop.property);
    return replace_all(rng_.pick(set->phrases), "{subject}",
                       reference(prop.component, false));
  }

  std::string render_action(const ActionInst& action) {
    const auto* set = snippets_.find_action(action.target.kind, action.action);
    std::string out = rng_.pick(set->phrases);
    if (out.find("{target}") != std::string::npos) {
      out = replace_all(out, "{target}", reference(action.target, false));
    }
    if (!action.values.empty()) {
      out = replace_all(out, "{value}", render_value(action.values[0].value));
    }
    return out;
  }

  std::string render_block(const EventBlock& block) {
    const auto* set =
        snippets_.find_event(block.event.component.kind, block.event.event);
    std::string event = replace_all(rng_.pick(set->phrases), "{subject}",
                                    reference(block.event.component, true));
    std::string actions = render_action(block.actions[0]);
    for (std::size_t i = 1; i < block.actions.size(); ++i) {
      auto join = rng_.pick(snippets_.action_joins());
      join = replace_all(join, "{b}", render_action(block.actions[i]));
      actions = replace_all(join, "{a}", actions);
    }
    return capitalize(rng_.pick(snippets_.event_markers())) + " " + event +
           ", " + actions + ".";
  }

  ParallelExample finish(std::string nl) {
    std::map<std::string, std::string> names;
    ParallelExample out;
    std::string text;
    int strings = 0;
    int numbers = 0;
    for (std::size_t i = 0; i < nl.size(); ++i) {
      if (nl[i] != kOpen) {
        text += nl[i];
        continue;
      }
      const auto close = nl.find(kClose, i);
      const auto marker = nl.substr(i, close - i + 1);
      const auto& slot = slots_.at(std::stoul(nl.substr(i + 1, close - i - 1)));
      const auto name = slot.family == LiteralFamily::kNumber
                            ? "number" + std::to_string(numbers++)
                            : "string" + std::to_string(strings++);
      names[marker] = name;
      out.dict.set(name, slot.value);
      text += name;
      i = close;
    }
    auto rename = [&](ValueRef& value) {
      if (auto* lit = std::get_if<LiteralRef>(&value)) {
        lit->placeholder = names.at(lit->placeholder);
      }
    };
    for (auto& comp : screen_.components) {
      for (auto& arg : comp.args) rename(arg.value);
    }
    for (auto& block : screen_.code) {
      for (auto& action : block.actions) {
        for (auto& v : action.values) rename(v.value);
      }
    }
    SarApp app;
    app.screens.push_back(screen_);
    out.nl = std::move(text);
    out.sar = serialize(app, catalog_);
    return out;
  }

  const SynthConfig& config_;
  const Catalog& catalog_;
  const Snippets& snippets_;
  Rng& rng_;
  Screen screen_;
  std::map<std::string, int> counts_;
  std::vector<Slot> slots_;
};

}  // namespace

SynthConfig synth_config_from_json(std::string_view text) {
  SynthConfig config;
  try {
    const auto root = nlohmann::json::parse(text);
    if (!root.is_object()) throw ConfigError("synth config must be a JSON object");
    for (auto it = root.begin(); it != root.end(); ++it) {
      const auto& key = it.key();
      const auto& v = it.value();
      if (key == "seed") config.seed = v.get<std::uint64_t>();
      else if (key == "min_components") config.min_components = v.get<int>();
      else if (key == "max_components") config.max_components = v.get<int>();
      else if (key == "max_repeats") config.max_repeats = v.get<int>();
      else if (key == "kinds") config.kinds = v.get<std::vector<std::string>>();
      else if (key == "event_probability") config.event_probability = v.get<double>();
      else if (key == "max_events") config.max_events = v.get<int>();
      else if (key == "max_actions") config.max_actions = v.get<int>();
      else if (key == "arg_probability") config.arg_probability = v.get<double>();
      else if (key == "property_probability") config.property_probability = v.get<double>();
      else if (key == "group_probability") config.group_probability = v.get<double>();
      else if (key == "mutation_rate") config.mutation_rate = v.get<double>();
      else throw ConfigError("unknown synth config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("synth config: ") + e.what());
  }
  return config;
}

ParallelExample synthesize_one(const SynthConfig& config, std::uint64_t index,
                               const Catalog& catalog, const Snippets& snippets) {
  check_config(config, catalog);
  Rng rng{config.seed, index};
  auto example = ExampleBuilder(config, catalog, snippets, rng).build();
  if (config.mutation_rate > 0.0) {
    Rng mutation{config.seed, index, 1};
    example.nl = mutate(example.nl, config.mutation_rate, Lexicon::builtin(),
                        mutation, snippets);
  }
  example.seed = config.seed;
  example.index = index;
  return example;
}

std::vector<ParallelExample> synthesize(const SynthConfig& config,
                                        std::size_t n, const Catalog& catalog,
                                        const Snippets& snippets) {
  check_config(config, catalog);
  std::vector<ParallelExample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(synthesize_one(config, i, catalog, snippets));
  }
  return out;
}

}  // namespace sar
