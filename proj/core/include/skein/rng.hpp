#pragma once

#include <cstdint>
#include <random>

namespace skein {

/// Seeded generator for reproducible corpora and paths. mt19937_64 is pinned
/// by the standard; the bounded pick avoids std::uniform_int_distribution,
/// whose mapping is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
  bool coin() { return (next() & 1) != 0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace skein
