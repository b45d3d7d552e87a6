#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace blm {

std::uint64_t splitmix64(std::uint64_t x);

// Stable 64-bit seed for (global seed, ordinal); independent of how many
// other ordinals are drawn.
std::uint64_t derive_seed(std::uint64_t global, std::uint64_t ordinal);
std::uint64_t derive_seed(std::uint64_t global, std::string_view key);

// Seeded generator with platform-independent draws. The standard
// distributions are implementation-defined, so bounded draws and shuffles
// are done here on top of mt19937_64, whose output sequence is fixed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace blm
