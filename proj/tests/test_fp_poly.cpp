#include <gtest/gtest.h>

#include <algorithm>

#include "cmweil/arith.hpp"
#include "cmweil/fp_poly.hpp"
#include "gen.hpp"

using namespace cmweil;

namespace {

FpPoly random_fp(Rng& rng, const FpPolyRing& ring, int degree) {
  FpPoly a;
  for (int i = 0; i <= degree; ++i) a.push_back(rng.below(ring.modulus()));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

TEST(FpPoly, DivmodReconstructs) {
  Rng rng(1);
  for (const char* p : {"7", "1021", "1461501637330902918203684832716283019655932543661"}) {
    FpPolyRing ring{Integer(p)};
    for (int i = 0; i < 200; ++i) {
      const FpPoly a = random_fp(rng, ring, static_cast<int>(rng.below(std::uint64_t{9})));
      FpPoly b = random_fp(rng, ring, 1 + static_cast<int>(rng.below(std::uint64_t{5})));
      if (b.empty()) continue;
      const auto [q, r] = ring.divmod(a, b);
      ASSERT_LT(FpPolyRing::degree(r), FpPolyRing::degree(b));
      ASSERT_EQ(ring.add(ring.mul(q, b), r), a);
    }
  }
}

TEST(FpPoly, XgcdBezoutIdentity) {
  Rng rng(2);
  FpPolyRing ring{Integer(1021)};
  for (int i = 0; i < 300; ++i) {
    const FpPoly common = random_fp(rng, ring, static_cast<int>(rng.below(std::uint64_t{3})));
    if (common.empty()) continue;
    const FpPoly a = ring.mul(common, random_fp(rng, ring, 4));
    const FpPoly b = ring.mul(common, random_fp(rng, ring, 3));
    if (a.empty() || b.empty()) continue;
    const auto g = ring.xgcd(a, b);
    ASSERT_EQ(g.d, ring.gcd(a, b));
    ASSERT_EQ(g.d.back(), 1);
    ASSERT_EQ(ring.add(ring.mul(g.s, a), ring.mul(g.t, b)), g.d);
    ASSERT_TRUE(ring.rem(a, g.d).empty());
    ASSERT_TRUE(ring.rem(b, g.d).empty());
    ASSERT_TRUE(ring.rem(g.d, ring.make_monic(common)).empty());
  }
}

TEST(FpPoly, PowmodMatchesRepeatedMultiplication) {
  Rng rng(3);
  FpPolyRing ring{Integer(97)};
  for (int i = 0; i < 50; ++i) {
    const FpPoly m = ring.make_monic(random_fp(rng, ring, 4));
    if (FpPolyRing::degree(m) < 1) continue;
    const FpPoly base = random_fp(rng, ring, 5);
    FpPoly acc = ring.constant(1);
    for (unsigned e = 0; e < 30; ++e) {
      ASSERT_EQ(ring.powmod(base, Integer(e), m), ring.rem(acc, m));
      acc = ring.rem(ring.mul(acc, base), m);
    }
  }
}

TEST(FpPoly, RootsAgreeWithBruteForce) {
  Rng rng(4);
  for (unsigned long p : {5UL, 101UL, 4099UL, 10007UL}) {
    FpPolyRing ring{Integer(p)};
    for (int i = 0; i < 8; ++i) {
      // A product of known linear factors times a random cofactor.
      FpPoly f = ring.constant(1);
      for (int j = 0; j < 3; ++j) f = ring.mul(f, ring.linear(rng.below(Integer(p))));
      f = ring.mul(f, random_fp(rng, ring, 3));
      if (f.empty()) continue;
      std::vector<Integer> brute;
      for (unsigned long x = 0; x < p; ++x) {
        if (ring.eval(f, Integer(x)) == 0) brute.emplace_back(x);
      }
      ASSERT_EQ(ring.roots(f), brute) << "p=" << p;
    }
  }
}

TEST(FpPoly, CyclotomicSplitsWhenRIsOneModM) {
  for (const char* r : {"1021", "1461501637330902918203684832716283019655932543661"}) {
    FpPolyRing ring{Integer(r)};
    const auto roots = ring.roots(ring.reduce(cyclotomic_polynomial(5)));
    ASSERT_EQ(roots.size(), 4u);
    for (const auto& t : roots) EXPECT_EQ(powmod(t, 5, Integer(r)), 1);
  }
  FpPolyRing seven{Integer(7)};
  EXPECT_TRUE(seven.roots(seven.reduce(cyclotomic_polynomial(5))).empty());
}
