#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace lqt {

using Point = int;

// Capacity caps for the combinatorial closure kernels. Exceeding a cap is a
// reported error, never silent truncation.
struct Caps {
  std::size_t max_group_order = 200'000;
  std::size_t max_normal_subgroups = 20'000;
  std::size_t max_congruences = 100'000;
};

inline Caps& caps() {
  static Caps c;
  return c;
}

// One global seed drives every randomized sample (equivalences, terms).
inline std::uint64_t& global_seed() {
  static std::uint64_t s = 0xC0FFEE;
  return s;
}

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by center() if the join of qualifying congruences fails
// re-verification; observable rather than guessed away.
struct join_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic RNG wrapper; mt19937_64 output is specified by the standard,
// and we avoid std::uniform_int_distribution because its mapping is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t k) { return k ? eng_() % k : 0; }

 private:
  std::mt19937_64 eng_;
};

// Stable per-task seed derivation (splitmix64 step over mixed inputs).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
}

}  // namespace detail

}  // namespace lqt
