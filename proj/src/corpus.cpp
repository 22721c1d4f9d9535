#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numeric>
#include <sstream>

#include "sar/synthesizer.hpp"

namespace sar {

std::vector<double> parse_ratios(std::string_view text) {
  std::vector<double> out;
  std::string field;
  std::istringstream in{std::string(text)};
  double sum = 0;
  while (std::getline(in, field, text.find(':') != std::string_view::npos ? ':' : ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(field, &used);
      if (used != field.size() || !(v >= 0)) throw std::invalid_argument(field);
      out.push_back(v);
      sum += v;
    } catch (const std::exception&) {
      throw ConfigError("bad ratio '" + field + "' in '" + std::string(text) + "'");
    }
  }
  if (out.size() != 3 || sum <= 0) {
    throw ConfigError("expected three ratios such as 8:1:1, got '" +
                      std::string(text) + "'");
  }
  for (auto& v : out) v /= sum;
  return out;
}

Split split(const std::vector<ParallelExample>& corpus,
            const std::vector<double>& ratios, std::uint64_t seed) {
  if (ratios.size() != 3) throw ConfigError("split needs three ratios");
  double sum = 0;
  for (double r : ratios) {
    if (!(r >= 0)) throw ConfigError("ratios must be non-negative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("ratios must sum to 1");

  // Largest-remainder targets.
  const auto n = corpus.size();
  std::vector<std::size_t> target(3);
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = ratios[i] * static_cast<double>(n);
    target[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += target[i];
    remainders.push_back({exact - std::floor(exact), i});
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) {
    ++target[remainders[k % 3].second];
  }

  std::map<std::pair<std::string, std::string>, std::size_t> group_of;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = group_of.emplace(
        std::make_pair(corpus[i].nl, corpus[i].sar), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  Rng rng{seed, 2};
  rng.shuffle(groups.begin(), groups.end());
  std::stable_partition(groups.begin(), groups.end(),
                        [](const auto& g) { return g.size() > 1; });

  std::vector<std::size_t> part(n);
  std::vector<std::size_t> filled(3, 0);
  for (const auto& group : groups) {
    std::size_t best = 0;
    long long best_gap = std::numeric_limits<long long>::min();
    for (std::size_t p = 0; p < 3; ++p) {
      const auto gap = static_cast<long long>(target[p]) -
                       static_cast<long long>(filled[p]);
      if (gap > best_gap) {
        best_gap = gap;
        best = p;
      }
    }
    filled[best] += group.size();
    for (auto i : group) part[i] = best;
  }

  Split out;
  for (std::size_t i = 0; i < n; ++i) {
    (part[i] == 0 ? out.train : part[i] == 1 ? out.valid : out.test)
        .push_back(corpus[i]);
  }
  return out;
}

std::string to_corpus_line(const ParallelExample& example) {
  if (example.nl.find_first_of("\t\n") != std::string::npos ||
      example.sar.find_first_of("\t\n") != std::string::npos) {
    throw ConfigError("corpus fields must not contain tabs or newlines");
  }
  return example.nl + "\t" + example.sar + "\t" + to_json(example.dict);
}

ParallelExample from_corpus_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto a = line.find('\t');
  const auto b = a == std::string_view::npos ? a : line.find('\t', a + 1);
  if (b == std::string_view::npos ||
      line.find('\t', b + 1) != std::string_view::npos) {
    throw ConfigError("corpus line needs three tab-separated fields");
  }
  ParallelExample out;
  out.nl = std::string(line.substr(0, a));
  out.sar = std::string(line.substr(a + 1, b - a - 1));
  out.dict = dict_from_json(line.substr(b + 1));
  return out;
}

std::string write_corpus(const std::vector<ParallelExample>& corpus) {
  std::string out;
  for (const auto& e : corpus) out += to_corpus_line(e) + "\n";
  return out;
}

std::vector<ParallelExample> read_corpus(std::string_view text) {
  std::vector<ParallelExample> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty() || line == "\r") continue;
    try {
      auto example = from_corpus_line(line);
      example.index = out.size();
      out.push_back(std::move(example));
    } catch (const ConfigError& e) {
      throw ConfigError("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace sar
