#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <random>
#include <utility>
#include <vector>

namespace sar {

// Seedable generator with portable bounded draws. The standard
// distributions are implementation-defined, so everything that must be
// reproducible across toolchains goes through below()/unit().
class Rng {
 public:
  // Each seed word is split into two 32-bit halves and fed to a seed_seq,
  // so {seed, stream} pairs yield independent streams.
  Rng(std::initializer_list<std::uint64_t> seeds);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, 1) with 53 bits of precision.
  double unit();

  bool chance(double p) { return unit() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(below(items.size()))];
  }

  // Index drawn proportionally to non-negative weights.
  std::size_t weighted(const std::vector<double>& weights);

  template <typename It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(std::distance(first, last));
    for (std::uint64_t i = n; i > 1; --i) {
      auto j = below(i);
      using std::swap;
      swap(*(first + static_cast<std::ptrdiff_t>(i - 1)),
           *(first + static_cast<std::ptrdiff_t>(j)));
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sar
