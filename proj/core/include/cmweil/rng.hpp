#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace cmweil {

/// Seedable, splittable pseudorandom generator.
///
/// Every randomized operation in the library takes an Rng explicitly, so a
/// run is reproducible from its master seed. split() derives an independent
/// stream (used to give each worker thread its own generator) without
/// advancing the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, bound). bound must be positive.
  mpz_class below(const mpz_class& bound);

  /// Uniform in [lo, hi].
  mpz_class between(const mpz_class& lo, const mpz_class& hi);

  // UniformRandomBitGenerator interface, so std::shuffle and friends work.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cmweil
