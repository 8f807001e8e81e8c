#include "cmweil/rng.hpp"

#include <stdexcept>

namespace cmweil {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Lemire-style rejection to avoid modulo bias.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

mpz_class Rng::below(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("Rng::below: non-positive bound");
  if (bound.fits_ulong_p()) {
    return mpz_class(static_cast<unsigned long>(below(static_cast<std::uint64_t>(bound.get_ui()))));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  mpz_class x;
  do {
    x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w == 0 && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      x += mpz_class(static_cast<unsigned long>(word));
    }
  } while (x >= bound);
  return x;
}

mpz_class Rng::between(const mpz_class& lo, const mpz_class& hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  mpz_class span = hi - lo + 1;
  return lo + below(span);
}

}  // namespace cmweil
