#include <gtest/gtest.h>

#include <set>

#include "cmweil/error.hpp"
#include "cmweil/jacobian.hpp"
#include "cmweil/weilgen.hpp"
#include "gen.hpp"

using namespace cmweil;

namespace {

HyperellipticCurve binomial_curve(long q, unsigned p, long a) {
  std::vector<Integer> c(p + 1, Integer(0));
  c[0] = a;
  c[p] = 1;
  return HyperellipticCurve(Integer(q), c);
}

HyperellipticCurve random_curve(Rng& rng, const Integer& q, int genus) {
  for (;;) {
    std::vector<Integer> c;
    for (int i = 0; i < 2 * genus + 1; ++i) c.push_back(rng.below(q));
    c.push_back(1);
    try {
      return HyperellipticCurve(q, c);
    } catch (const PreconditionError&) {
    }
  }
}

// ---------------------------------------------------------------------------
// Oracles for tiny q.

long lmod(long a, long q) { return ((a % q) + q) % q; }

long lpow(long b, long e, long q) {
  long r = 1;
  b = lmod(b, q);
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

std::vector<long> small_coeffs(const HyperellipticCurve& c) {
  std::vector<long> out;
  for (const auto& x : c.f()) out.push_back(x.get_si());
  return out;
}

// Point counts over F_q and F_{q^2} (elements a + b w, w^2 = n a non-residue).
std::pair<long, long> point_counts(const HyperellipticCurve& c) {
  const long q = c.q().get_si();
  const std::vector<long> f = small_coeffs(c);
  long n = 2;
  while (lpow(n, (q - 1) / 2, q) != q - 1) ++n;
  using F2 = std::pair<long, long>;
  auto mul = [&](F2 x, F2 y) {
    return F2{lmod(x.first * y.first + n * (x.second * y.second % q), q), lmod(x.first * y.second + x.second * y.first, q)};
  };
  auto chi2 = [&](F2 z) -> long {
    if (z.first == 0 && z.second == 0) return 0;
    F2 r{1, 0}, b = z;
    long e = (q * q - 1) / 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r.first == 1 ? 1 : -1;
  };
  long n1 = q + 1, n2 = q * q + 1;
  for (long x = 0; x < q; ++x) {
    long v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = lmod(v * x + f[i], q);
    const long l = v == 0 ? 0 : (lpow(v, (q - 1) / 2, q) == 1 ? 1 : -1);
    n1 += l;
  }
  for (long a = 0; a < q; ++a) {
    for (long b = 0; b < q; ++b) {
      F2 v{0, 0};
      for (std::size_t i = f.size(); i-- > 0;) {
        v = mul(v, F2{a, b});
        v.first = lmod(v.first + f[i], q);
      }
      n2 += chi2(v);
    }
  }
  return {n1, n2};
}

long jacobian_order_from_counts(const HyperellipticCurve& c) {
  const auto [n1, n2] = point_counts(c);
  const long q = c.q().get_si();
  if (c.genus() == 1) return n1;
  return (n1 * n1 + n2) / 2 - q;  // genus 2
}

// Every reduced Mumford pair, by enumeration.
std::vector<MumfordDivisor> all_divisors(const HyperellipticCurve& c) {
  const long q = c.q().get_si();
  const int g = c.genus();
  std::vector<MumfordDivisor> out;
  const FpPolyRing& ring = c.ring();
  for (int du = 0; du <= g; ++du) {
    long nu = 1, nv = 1;
    for (int i = 0; i < du; ++i) nu *= q;
    nv = nu;
    for (long iu = 0; iu < nu; ++iu) {
      FpPoly u;
      long t = iu;
      for (int i = 0; i < du; ++i) {
        u.push_back(Integer(t % q));
        t /= q;
      }
      u.push_back(Integer(1));
      for (long iv = 0; iv < nv; ++iv) {
        FpPoly v;
        long s = iv;
        for (int i = 0; i < du; ++i) {
          v.push_back(Integer(s % q));
          s /= q;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        MumfordDivisor d{u, v};
        if (ring.rem(ring.sub(ring.mul(v, v), c.f()), u).empty()) out.push_back(d);
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Curves

TEST(Curve, ParseAndPrint) {
  const HyperellipticCurve c = HyperellipticCurve::parse("hyperelliptic:911:34,0,0,0,0,0,0,1");
  EXPECT_EQ(c.genus(), 3);
  EXPECT_EQ(c.q(), 911);
  EXPECT_EQ(c.to_string(), "hyperelliptic:911:34,0,0,0,0,0,0,1");
  const HyperellipticCurve d(Integer(11), {Integer(-1), Integer(0), Integer(0), Integer(1)});
  EXPECT_EQ(d.to_string(), "hyperelliptic:11:10,0,0,1");
}

TEST(Curve, Preconditions) {
  EXPECT_THROW(HyperellipticCurve(Integer(15), {Integer(1), Integer(0), Integer(0), Integer(1)}), PreconditionError);
  EXPECT_THROW(HyperellipticCurve(Integer(2), {Integer(1), Integer(0), Integer(0), Integer(1)}), PreconditionError);
  EXPECT_THROW(HyperellipticCurve(Integer(11), {Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)}),
               PreconditionError);
  EXPECT_THROW(HyperellipticCurve(Integer(11), {Integer(1), Integer(0), Integer(0), Integer(2)}), PreconditionError);
  // x^3 - x^2 = x^2 (x - 1) is not squarefree.
  EXPECT_THROW(HyperellipticCurve(Integer(11), {Integer(0), Integer(0), Integer(-1), Integer(1)}), PreconditionError);
  // x^5 + 18 over 5: x^5 + 3 = (x + 3)^5.
  EXPECT_THROW(binomial_curve(5, 5, 18), PreconditionError);
  EXPECT_THROW(HyperellipticCurve::parse("elliptic:11:1,0,0,1"), std::invalid_argument);
  EXPECT_THROW(HyperellipticCurve::parse("hyperelliptic:11"), std::invalid_argument);
  EXPECT_THROW(HyperellipticCurve::parse("hyperelliptic:11:1,x,0,1"), std::invalid_argument);
  EXPECT_THROW(HyperellipticCurve::parse("hyperelliptic:11:1,0,0,2"), PreconditionError);
}

// ---------------------------------------------------------------------------
// Group law

TEST(GroupLaw, PropertiesOnRandomTriples) {
  Rng rng(1);
  std::vector<HyperellipticCurve> curves = {binomial_curve(2023621, 5, 18), binomial_curve(911, 7, 34)};
  curves.push_back(random_curve(rng, Integer("1152921504606847009"), 2));
  curves.push_back(random_curve(rng, Integer(1000003), 1));
  curves.push_back(random_curve(rng, Integer(10007), 4));
  for (const auto& c : curves) {
    const MumfordDivisor zero = identity_divisor();
    for (int it = 0; it < 1000; ++it) {
      const MumfordDivisor a = random_divisor(c, rng), b = random_divisor(c, rng), d = random_divisor(c, rng);
      ASSERT_TRUE(is_valid(a, c));
      const MumfordDivisor ab = divisor_add(a, b, c);
      ASSERT_TRUE(is_valid(ab, c));
      EXPECT_EQ(divisor_add(a, zero, c), a);
      EXPECT_EQ(divisor_add(zero, a, c), a);
      EXPECT_TRUE(divisor_add(a, negate(a, c), c).is_identity());
      EXPECT_EQ(ab, divisor_add(b, a, c));
      EXPECT_EQ(divisor_add(ab, d, c), divisor_add(a, divisor_add(b, d, c), c));
      // Doubling goes through the same composition with equal supports.
      EXPECT_EQ(divisor_add(a, a, c), scalar_mul(Integer(2), a, c));
    }
  }
}

TEST(GroupLaw, ScalarMultiplication) {
  Rng rng(2);
  const HyperellipticCurve c = binomial_curve(2023621, 5, 18);
  for (int it = 0; it < 50; ++it) {
    const MumfordDivisor d = random_divisor(c, rng);
    EXPECT_TRUE(scalar_mul(Integer(0), d, c).is_identity());
    EXPECT_EQ(scalar_mul(Integer(1), d, c), d);
    MumfordDivisor acc = identity_divisor();
    for (int n = 1; n <= 40; ++n) {
      acc = divisor_add(acc, d, c);
      ASSERT_EQ(scalar_mul(Integer(n), d, c), acc) << n;
    }
    EXPECT_EQ(scalar_mul(Integer(-7), d, c), negate(scalar_mul(Integer(7), d, c), c));
    const Integer m = rng.below(Integer(1) << 80), n = rng.below(Integer(1) << 80);
    EXPECT_EQ(scalar_mul(m + n, d, c), divisor_add(scalar_mul(m, d, c), scalar_mul(n, d, c), c));
    EXPECT_EQ(scalar_mul(m * n, d, c), scalar_mul(m, scalar_mul(n, d, c), c));
  }
}

TEST(GroupLaw, Validity) {
  const HyperellipticCurve c = binomial_curve(11, 5, 1);
  EXPECT_TRUE(is_valid(identity_divisor(), c));
  // x^5 + 1 vanishes at x = -1, so (x + 1, 0) is a point.
  EXPECT_TRUE(is_valid(MumfordDivisor{{Integer(1), Integer(1)}, {}}, c));
  EXPECT_FALSE(is_valid(MumfordDivisor{{Integer(2), Integer(1)}, {}}, c));
  EXPECT_FALSE(is_valid(MumfordDivisor{{Integer(1), Integer(2)}, {}}, c));        // not monic
  EXPECT_FALSE(is_valid(MumfordDivisor{{Integer(1), Integer(0), Integer(0), Integer(1)}, {}}, c));  // deg u > g
  EXPECT_FALSE(is_valid(MumfordDivisor{{Integer(1), Integer(1)}, {Integer(0), Integer(1)}}, c));   // deg v >= deg u
}

TEST(GroupLaw, EnumeratedJacobianMatchesPointCounts) {
  Rng rng(3);
  int curves = 0;
  for (long q : {7L, 11L, 13L, 17L}) {
    for (int genus : {1, 2}) {
      for (int rep = 0; rep < 3; ++rep) {
        const HyperellipticCurve c = random_curve(rng, Integer(q), genus);
        const std::vector<MumfordDivisor> all = all_divisors(c);
        const long order = jacobian_order_from_counts(c);
        ASSERT_EQ(static_cast<long>(all.size()), order) << c.to_string();
        const auto [lo, hi] = weil_interval(c.q(), genus);
        EXPECT_LE(lo, order);
        EXPECT_GE(hi, order);
        // The group law stays inside the enumerated set and [#J] kills it.
        std::set<std::pair<FpPoly, FpPoly>> members;
        for (const auto& d : all) members.insert({d.u, d.v});
        for (int it = 0; it < 200; ++it) {
          const MumfordDivisor& a = all[rng.below(all.size())];
          const MumfordDivisor& b = all[rng.below(all.size())];
          const MumfordDivisor s = divisor_add(a, b, c);
          EXPECT_TRUE(members.count({s.u, s.v}));
        }
        for (const auto& d : all) ASSERT_TRUE(scalar_mul(Integer(order), d, c).is_identity());
        // On tiny fields the Weil interval can hold several multiples of the
        // exponent; the check must then decline rather than pass.
        const OrderCheckResult rep = probable_order_check_report(c, Integer(order), 20, rng);
        EXPECT_EQ(rep.trials_killed, 20);
        EXPECT_EQ(Integer(order) % rep.exponent_lower_bound, 0);
        EXPECT_EQ(rep.passed, rep.multiples_in_interval == 1) << c.to_string();
        ++curves;
      }
    }
  }
  EXPECT_EQ(curves, 24);
}

// ---------------------------------------------------------------------------
// random_divisor

TEST(RandomDivisor, Statistics) {
  const HyperellipticCurve c = binomial_curve(2023621, 5, 18);
  Rng rng(4);
  int full = 0;
  std::set<std::pair<FpPoly, FpPoly>> seen;
  for (int i = 0; i < 1000; ++i) {
    const MumfordDivisor d = random_divisor(c, rng);
    ASSERT_TRUE(is_valid(d, c));
    if (FpPolyRing::degree(d.u) == 2) ++full;
    seen.insert({d.u, d.v});
  }
  EXPECT_GE(full, 990);
  EXPECT_GE(seen.size(), 995u);
  Rng a(5), b(6);
  EXPECT_NE(random_divisor(c, a), random_divisor(c, b));
}

// ---------------------------------------------------------------------------
// Order checks

TEST(WeilInterval, Bounds) {
  const auto [lo, hi] = weil_interval(Integer(911), 3);
  EXPECT_EQ(lo, Integer(617674481));
  EXPECT_EQ(hi, Integer(919366543));
  const auto [lo1, hi1] = weil_interval(Integer(101), 1);
  EXPECT_EQ(lo1, 82);   // 101 + 1 - 2 sqrt 101 = 81.9...
  EXPECT_EQ(hi1, 122);  // 122.09...
}

TEST(OrderCheck, PaperCurves) {
  Rng rng(7);
  const HyperellipticCurve c7 = binomial_curve(911, 7, 34);
  const OrderCheckResult r7 = probable_order_check_report(c7, Integer(778417333), 10, rng);
  EXPECT_TRUE(r7.passed);
  EXPECT_EQ(r7.trials_killed, 10);
  const HyperellipticCurve c5 = binomial_curve(2023621, 5, 18);
  EXPECT_TRUE(probable_order_check(c5, Integer("4092747290896"), 10, rng));
}

TEST(OrderCheck, Rejections) {
  Rng rng(8);
  const HyperellipticCurve c7 = binomial_curve(911, 7, 34);
  EXPECT_FALSE(probable_order_check(c7, Integer(778417334), 10, rng));
  const auto [lo, hi] = weil_interval(Integer(911), 3);
  const OrderCheckResult out = probable_order_check_report(c7, hi + 1, 10, rng);
  EXPECT_FALSE(out.passed);
  EXPECT_FALSE(out.in_weil_interval);
  EXPECT_FALSE(probable_order_check(c7, lo - 1, 10, rng));
  // Another twist has a different order.
  EXPECT_FALSE(probable_order_check(binomial_curve(911, 7, 1), Integer(778417333), 10, rng));
  EXPECT_THROW(probable_order_check(c7, Integer(0), 10, rng), PreconditionError);
  EXPECT_THROW(probable_order_check(c7, Integer(5), 0, rng), PreconditionError);
}

TEST(OrderCheck, LinksExhaustiveWinnerToCurve) {
  const SpecPtr k5 = make_cyclotomic_cm(5);
  const FieldElement pi(k5->field, {Integer(155), Integer(-456), Integer(-870), Integer(810)});
  ASSERT_EQ(pi * k5->conj(pi), FieldElement::from_integer(k5->field, 2023621));
  Rng rng(9);
  EXPECT_TRUE(probable_order_check(binomial_curve(2023621, 5, 18), group_order(pi), 10, rng));
}

TEST(TwistSearch, PaperCurves) {
  Rng rng(10);
  EXPECT_EQ(twist_search(7, Integer(778417333), Integer(911), Integer(100), rng), Integer(34));
  EXPECT_EQ(twist_search(5, Integer("4092747290896"), Integer(2023621), Integer(100), rng), Integer(18));
}

TEST(TwistSearch, NotFoundAndErrors) {
  Rng rng(11);
  EXPECT_FALSE(twist_search(7, Integer(778417333), Integer(911), Integer(20), rng).has_value());
  EXPECT_THROW(twist_search(7, Integer(5), Integer(913), Integer(10), rng), PreconditionError);
  EXPECT_THROW(twist_search(7, Integer(5), Integer(907), Integer(10), rng), PreconditionError);
  EXPECT_THROW(twist_search(4, Integer(5), Integer(13), Integer(10), rng), PreconditionError);
}
