#include <cstdlib>

#include "cmweil/error.hpp"
#include "cmweil/weilgen.hpp"

namespace cmweil {

CocksPinchResult cocks_pinch_g1(const Integer& d, std::uint64_t k, const Integer& r, Rng& rng,
                                std::uint64_t max_iters) {
  if (d <= 0) throw PreconditionError("cocks_pinch_g1: d must be positive");
  for (const auto& pp : factorize(d)) {
    if (pp.exponent > 1) throw PreconditionError("cocks_pinch_g1: d must be squarefree");
  }
  if (!is_prime(r) || r == 2) throw PreconditionError("cocks_pinch_g1: r must be an odd prime");
  if (k == 0 || (r - 1) % Integer(static_cast<unsigned long>(k)) != 0) {
    throw PreconditionError("cocks_pinch_g1: k must divide r - 1");
  }
  if (d % r == 0 || legendre(-d, r) != 1) {
    throw NotSplitError("cocks_pinch_g1: r does not split in Q(sqrt(-" + d.get_str() + "))");
  }
  FieldPtr field = NumberField::create(IntPolynomial{d, Integer(0), Integer(1)});
  const Integer t = *sqrt_mod(-d, r);
  const Integer disc = 4 * d;

  std::uint64_t candidates = 0;
  while (candidates < max_iters) {
    // pi = x + y theta with pi = 1 at theta = t and pi = zeta at theta = -t.
    const Residue zeta = primitive_kth_root(r, k, rng);
    const Residue one(Integer(1), r);
    const Residue inv2 = Residue(Integer(2), r).inverse();
    const Residue x0 = (one + zeta) * inv2;
    const Residue y0 = (one - zeta) * inv2 * Residue(t, r).inverse();
    const Integer cx = x0.centered(), cy = y0.centered();
    // Translates by r (i + j theta), shell by shell in the max norm.
    for (long s = 0; s <= 64 && candidates < max_iters; ++s) {
      for (long i = -s; i <= s && candidates < max_iters; ++i) {
        for (long j = -s; j <= s && candidates < max_iters; ++j) {
          if (std::labs(i) != s && std::labs(j) != s) continue;
          const Integer x = cx + r * i;
          const Integer y = cy + r * j;
          if (y == 0) continue;
          ++candidates;
          const Integer q = x * x + d * y * y;
          if (!is_prime(q) || disc % q == 0) continue;
          CocksPinchResult out;
          out.q = q;
          out.pi = FieldElement(field, {x, y});
          out.candidates = candidates;
          return out;
        }
      }
    }
  }
  throw MaxItersExceeded("cocks_pinch_g1: no prime found within " + std::to_string(max_iters) + " candidates");
}

}  // namespace cmweil
