#pragma once

#include <cstdint>
#include <random>

namespace aag {

/// Seeded generator with a fixed index mapping, so identical seeds give
/// identical draws on any platform with a conforming mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, n) via 128-bit multiply-high; avoids the
  /// implementation-defined behaviour of std::uniform_int_distribution.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Uniform sign, +1 or -1.
  int sign() { return (next() & 1) ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aag
