#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sar/catalog.hpp"
#include "sar/literals.hpp"
#include "sar/rng.hpp"
#include "sar/snippets.hpp"

namespace sar {

struct SynthConfig {
  std::uint64_t seed = 0;
  int min_components = 1;
  int max_components = 4;
  int max_repeats = 3;
  // Kinds eligible for sampling; empty means the whole catalog.
  std::vector<std::string> kinds;
  double event_probability = 0.85;
  int max_events = 2;
  int max_actions = 2;
  double arg_probability = 0.5;
  double property_probability = 0.5;
  double group_probability = 0.3;  // "two buttons" for arg-less repeats
  double mutation_rate = 0.0;
};

// Reads a JSON object whose keys mirror SynthConfig's fields; missing keys
// keep their defaults. Throws ConfigError.
SynthConfig synth_config_from_json(std::string_view text);

struct ParallelExample {
  std::string nl;   // templated: literals appear as placeholders
  std::string sar;
  LiteralDict dict;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  bool operator==(const ParallelExample&) const = default;
};

// Example i depends only on (config.seed, i). Throws ConfigError for
// impossible configurations.
std::vector<ParallelExample> synthesize(
    const SynthConfig& config, std::size_t n,
    const Catalog& catalog = Catalog::builtin(),
    const Snippets& snippets = Snippets::builtin());

ParallelExample synthesize_one(const SynthConfig& config, std::uint64_t index,
                               const Catalog& catalog = Catalog::builtin(),
                               const Snippets& snippets = Snippets::builtin());

// Replaces round(rate * words) eligible words with another member of their
// lexicon class. Placeholders and words a component noun depends on are
// never touched. Draws are made up front, so for a fixed rng seed the
// replaced positions at a lower rate are a subset of those at a higher one.
std::string mutate(std::string_view nl, double rate, const Lexicon& lexicon,
                   Rng& rng, const Snippets& snippets = Snippets::builtin());

// Words mutate() may replace.
std::vector<std::string> mutable_words(
    std::string_view nl, const Lexicon& lexicon = Lexicon::builtin(),
    const Snippets& snippets = Snippets::builtin());

struct Split {
  std::vector<ParallelExample> train;
  std::vector<ParallelExample> valid;
  std::vector<ParallelExample> test;
};

// Identical (nl, sar) pairs always land in the same part. Parts keep the
// corpus order. Throws ConfigError unless ratios are non-negative and sum
// to 1.
Split split(const std::vector<ParallelExample>& corpus,
            const std::vector<double>& ratios, std::uint64_t seed = 0);

// "8:1:1" -> {0.8, 0.1, 0.1}. Throws ConfigError.
std::vector<double> parse_ratios(std::string_view text);

// One example per line: nl TAB sar TAB dict-json.
std::string to_corpus_line(const ParallelExample& example);
ParallelExample from_corpus_line(std::string_view line);
std::string write_corpus(const std::vector<ParallelExample>& corpus);
std::vector<ParallelExample> read_corpus(std::string_view text);

}  // namespace sar
