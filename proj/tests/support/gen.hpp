#pragma once

// Hand-rolled generators for property tests.

#include <cstdint>
#include <vector>

#include "cmweil/numfield.hpp"
#include "cmweil/rng.hpp"

namespace cmweil::testing {

inline Integer random_bits(Rng& rng, unsigned bits) {
  return rng.below(Integer(1) << bits);
}

/// Uniform in [-bound, bound].
inline Integer random_signed(Rng& rng, const Integer& bound) { return rng.between(-bound, bound); }

inline std::int64_t random_small(Rng& rng, std::int64_t bound) {
  return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * bound + 1))) - bound;
}

inline IntPolynomial random_poly(Rng& rng, int degree, const Integer& bound, bool monic = false) {
  std::vector<Integer> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_signed(rng, bound));
  Integer top = monic ? Integer(1) : random_signed(rng, bound);
  if (top == 0) top = 1;
  c.push_back(top);
  return IntPolynomial(std::move(c));
}

inline FieldElement random_integral(Rng& rng, const FieldPtr& field, const Integer& bound) {
  std::vector<Integer> c;
  for (int i = 0; i < field->degree(); ++i) c.push_back(random_signed(rng, bound));
  return FieldElement(field, std::move(c));
}

inline FieldElement random_nonzero_integral(Rng& rng, const FieldPtr& field, const Integer& bound) {
  for (;;) {
    FieldElement x = random_integral(rng, field, bound);
    if (!x.is_zero()) return x;
  }
}

/// Random element with denominators up to `den_bound`.
inline FieldElement random_rational(Rng& rng, const FieldPtr& field, const Integer& bound, std::uint64_t den_bound) {
  std::vector<Integer> c;
  for (int i = 0; i < field->degree(); ++i) c.push_back(random_signed(rng, bound));
  return FieldElement(field, std::move(c), Integer(static_cast<unsigned long>(1 + rng.below(den_bound))));
}

}  // namespace cmweil::testing
