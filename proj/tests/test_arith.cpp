#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "cmweil/arith.hpp"
#include "cmweil/error.hpp"
#include "gen.hpp"

using namespace cmweil;
using cmweil::testing::random_bits;
using cmweil::testing::random_poly;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t brute_order(std::uint64_t a, std::uint64_t r) {
  std::uint64_t x = a % r, k = 1;
  while (x != 1) {
    x = x * a % r;
    ++k;
  }
  return k;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Long division by a monic polynomial, written independently of the library.
IntPolynomial long_divide(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  std::vector<Integer> q(std::max(0, a.degree() - db + 1), Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    const Integer c = rem[i];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (const auto& c : rem) EXPECT_EQ(c, 0);
  return IntPolynomial(q);
}

IntPolynomial x_pow_minus_one(std::uint64_t d) {
  std::vector<Integer> c(d + 1, Integer(0));
  c[0] = -1;
  c[d] = 1;
  return IntPolynomial(c);
}

// Phi_k = prod_{d | k} (x^d - 1)^mu(k/d).
IntPolynomial mobius_cyclotomic(std::uint64_t k) {
  IntPolynomial num{Integer(1)}, den{Integer(1)};
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = mobius(k / d);
    if (mu == 1) num = num * x_pow_minus_one(d);
    if (mu == -1) den = den * x_pow_minus_one(d);
  }
  return long_divide(num, den);
}

// Determinant by Gaussian elimination over Q.
Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Integer sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  }
  const Rational d = rational_det(s);
  EXPECT_EQ(d.get_den(), 1);
  return d.get_num();
}

}  // namespace

TEST(Primality, SpecExamples) {
  EXPECT_TRUE(is_prime(911));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2023621));
}

TEST(Primality, AgreesWithTrialDivisionBelow30000) {
  for (std::uint64_t n = 0; n < 30000; ++n) {
    ASSERT_EQ(is_prime(Integer(static_cast<unsigned long>(n))), trial_division_prime(n)) << n;
    ASSERT_EQ(is_prime_u64(n), trial_division_prime(n)) << n;
  }
}

TEST(Primality, PseudoprimesAndLargeKnownValues) {
  for (std::uint64_t n : {561ULL, 41041ULL, 825265ULL, 2047ULL, 3215031751ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime_u64(n)) << n;
    EXPECT_FALSE(is_prime(Integer(std::to_string(n)))) << n;
  }
  const Integer m127 = (Integer(1) << 127) - 1;
  EXPECT_TRUE(is_prime(m127));
  EXPECT_FALSE(is_prime((Integer(1) << 128) + 1));
  EXPECT_FALSE(is_prime(m127 * m127));
  EXPECT_TRUE(is_prime((Integer(1) << 160) + 685));
  EXPECT_TRUE(is_prime((Integer(1) << 160) - 1445));
  EXPECT_FALSE(is_prime(Integer(-7)));
}

TEST(Primality, U64AgreesWithGeneralTest) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = rng.next_u64() | 1;
    ASSERT_EQ(is_prime_u64(n), is_prime(Integer(std::to_string(n)))) << n;
  }
}

TEST(ModArith, PowmodMatchesRepeatedMultiplication) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Integer m = Integer(static_cast<unsigned long>(2 + rng.below(std::uint64_t{5000})));
    const Integer b = rng.below(Integer(100000)) - 50000;
    const unsigned e = static_cast<unsigned>(rng.below(std::uint64_t{40}));
    Integer naive = 1;
    for (unsigned j = 0; j < e; ++j) naive = mod(naive * b, m);
    ASSERT_EQ(powmod(b, Integer(e), m), mod(naive, m));
  }
}

TEST(ModArith, InverseAndErrors) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Integer m = Integer(static_cast<unsigned long>(2 + rng.below(std::uint64_t{100000})));
    const Integer a = rng.below(m);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g == 1) {
      ASSERT_EQ(mod(a * invmod(a, m), m), mod(Integer(1), m));
    } else {
      ASSERT_THROW(invmod(a, m), PreconditionError);
    }
  }
  EXPECT_THROW(Residue(Integer(3), Integer(1)), PreconditionError);
}

TEST(ModArith, SqrtModAndLegendreExhaustive) {
  for (std::uint32_t p : small_primes(300)) {
    if (p == 2) continue;
    const Integer pp(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const Integer aa(a);
      const int euler = a == 0 ? 0 : (powmod(aa, Integer((p - 1) / 2), pp) == 1 ? 1 : -1);
      ASSERT_EQ(legendre(aa, pp), euler) << a << " mod " << p;
      const auto s = sqrt_mod(aa, pp);
      ASSERT_EQ(s.has_value(), euler >= 0);
      if (s) {
        ASSERT_EQ(mod(*s * *s, pp), aa);
      }
    }
  }
}

TEST(ModArith, SizeHelpers) {
  EXPECT_EQ(bit_length(Integer(0)), 0u);
  EXPECT_EQ(bit_length(Integer(911)), 10u);
  EXPECT_EQ(bit_length(Integer(1) << 160), 161u);
  EXPECT_NEAR(log_integer(Integer(1) << 1000), 1000 * std::log(2.0), 1e-9);
  EXPECT_NEAR(log_integer(Integer(2023621)), std::log(2023621.0), 1e-12);
  EXPECT_TRUE(is_perfect_square(Integer(1) << 200));
  EXPECT_FALSE(is_perfect_square((Integer(1) << 200) + 1));
}

TEST(Factoring, ProductOfRandomPrimesRoundTrips) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    std::map<Integer, unsigned> expect;
    Integer n = 1;
    const int parts = 1 + static_cast<int>(rng.below(std::uint64_t{4}));
    for (int j = 0; j < parts; ++j) {
      Integer p;
      do {
        p = random_bits(rng, 4 + static_cast<unsigned>(rng.below(std::uint64_t{36})));
      } while (!is_prime(p));
      const unsigned e = 1 + static_cast<unsigned>(rng.below(std::uint64_t{3}));
      expect[p] += e;
      for (unsigned t = 0; t < e; ++t) n *= p;
    }
    std::map<Integer, unsigned> got;
    for (const auto& pp : factorize(n)) {
      ASSERT_TRUE(is_prime(pp.prime));
      got[pp.prime] += pp.exponent;
    }
    ASSERT_EQ(got, expect) << n;
  }
}

TEST(Factoring, SmallBoundLeavesCofactor) {
  const Integer big = (Integer(1) << 127) - 1;
  Integer cofactor;
  const Factorization f = factor_small(Integer(360) * big, 1000, cofactor);
  EXPECT_EQ(cofactor, big);
  Integer prod = 1;
  for (const auto& pp : f) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    prod *= t;
  }
  EXPECT_EQ(prod, 360);
}

TEST(Order, SpecExamples) {
  EXPECT_EQ(multiplicative_order(911, 29), 4);
  EXPECT_EQ(multiplicative_order(1, 1021), 1);
  EXPECT_EQ(multiplicative_order(2023621, 1021), 2);
  const Integer r = (Integer(1) << 160) + 685;
  EXPECT_EQ(multiplicative_order(r - 1, r), 2);
}

TEST(Order, AgreesWithBruteForceBelow500) {
  for (std::uint32_t r : small_primes(500)) {
    const Integer rr(r);
    for (std::uint32_t a = 1; a < r; ++a) {
      const std::uint64_t k = brute_order(a, r);
      ASSERT_EQ(multiplicative_order(Integer(a), rr), Integer(static_cast<unsigned long>(k)));
      ASSERT_TRUE(has_order(Integer(a), k, rr));
      if (k > 1) {
        ASSERT_FALSE(has_order(Integer(a), k - 1, rr));
      }
    }
  }
}

TEST(Order, SuppliedFactorizationIsUsed) {
  const Integer r = (Integer(1) << 89) - 1;  // Mersenne prime
  const Factorization hint = factorize(r - 1);
  for (unsigned long a : {2UL, 3UL, 5UL, 7UL}) {
    const Integer o = multiplicative_order(Integer(a), r, &hint);
    EXPECT_EQ(powmod(Integer(a), o, r), 1);
    EXPECT_EQ(o, multiplicative_order(Integer(a), r));
  }
}

TEST(Cyclotomic, SpecExamples) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPolynomial{Integer(-1), Integer(1)}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPolynomial{Integer(1), Integer(1)}));
  EXPECT_EQ(cyclotomic_polynomial(10), (IntPolynomial{Integer(1), Integer(-1), Integer(1), Integer(-1), Integer(1)}));
}

TEST(Cyclotomic, AgreesWithMobiusProduct) {
  for (std::uint64_t k = 1; k <= 120; ++k) {
    const IntPolynomial phi = cyclotomic_polynomial(k);
    ASSERT_EQ(phi, mobius_cyclotomic(k)) << k;
    ASSERT_EQ(static_cast<std::uint64_t>(phi.degree()), euler_phi(k));
  }
}

TEST(Cyclotomic, DivisorsAndTotient) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::vector<std::uint64_t> divs, primes;
    std::uint64_t phi = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        divs.push_back(d);
        if (trial_division_prime(d)) primes.push_back(d);
      }
      if (std::gcd(d, n) == 1) ++phi;
    }
    ASSERT_EQ(divisors(n), divs);
    ASSERT_EQ(prime_divisors(n), primes);
    ASSERT_EQ(euler_phi(n), phi);
  }
}

TEST(Cyclotomic, PrimitiveRoots) {
  Rng rng(1);
  EXPECT_EQ(primitive_kth_root(Integer(1021), 1, rng).value(), 1);
  EXPECT_EQ(primitive_kth_root(Integer(1021), 2, rng).value(), 1020);
  for (int i = 0; i < 20; ++i) {
    const Integer z = primitive_kth_root(Integer(29), 4, rng).value();
    EXPECT_TRUE(z == 12 || z == 17) << z;
  }
  for (std::uint32_t r : small_primes(200)) {
    for (std::uint64_t k : divisors(r - 1)) {
      std::vector<Integer> brute;
      for (std::uint32_t a = 1; a < r; ++a) {
        if (brute_order(a, r) == k) {
          brute.emplace_back(a);
        }
      }
      std::vector<Integer> got;
      for (const auto& z : all_primitive_kth_roots(Integer(r), k)) got.push_back(z.value());
      ASSERT_EQ(got, brute) << r << " " << k;
    }
  }
  EXPECT_THROW(primitive_kth_root(Integer(29), 5, rng), PreconditionError);
}

// Phi_k(q) = 0 mod r iff ord_r(q) = k, for r not dividing k.
TEST(Cyclotomic, OrderCyclotomicConsistencyBelow500) {
  for (std::uint32_t r : small_primes(500)) {
    for (std::uint64_t k : divisors(r - 1)) {
      const IntPolynomial phi = cyclotomic_polynomial(k);
      std::vector<std::int64_t> c;
      for (const auto& x : phi.coefficients()) c.push_back(mod(x, Integer(r)).get_si());
      for (std::uint64_t q = 1; q < r; ++q) {
        std::int64_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = (acc * static_cast<std::int64_t>(q) + c[i]) % r;
        ASSERT_EQ(acc == 0, brute_order(q, r) == k) << "r=" << r << " k=" << k << " q=" << q;
      }
    }
  }
}

TEST(PolyAlgebra, ResultantAgreesWithSylvesterDeterminant) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const int da = 1 + static_cast<int>(rng.below(std::uint64_t{6}));
    const int db = 1 + static_cast<int>(rng.below(std::uint64_t{6}));
    const IntPolynomial a = random_poly(rng, da, Integer(20));
    const IntPolynomial b = random_poly(rng, db, Integer(20));
    ASSERT_EQ(resultant(a, b), sylvester_resultant(a, b)) << a << " | " << b;
  }
}

TEST(PolyAlgebra, ResultantEdgeCases) {
  const IntPolynomial f{Integer(1), Integer(1), Integer(1), Integer(1), Integer(1)};
  // Res(f, c) = c^deg f.
  EXPECT_EQ(resultant(f, IntPolynomial{Integer(2)}), 16);
  // Res(f, x - 1) = (-1)^4 f(1) = 5.
  EXPECT_EQ(resultant(f, IntPolynomial{Integer(-1), Integer(1)}), 5);
  // Common root.
  const IntPolynomial g{Integer(-1), Integer(1)};
  EXPECT_EQ(resultant(g * f, g * IntPolynomial{Integer(3), Integer(1)}), 0);
}

TEST(PolyAlgebra, Discriminants) {
  EXPECT_EQ(discriminant(IntPolynomial{Integer(1), Integer(0), Integer(1)}), -4);
  EXPECT_EQ(discriminant(IntPolynomial{Integer(1), Integer(1), Integer(0), Integer(1)}), -31);
  EXPECT_EQ(discriminant(cyclotomic_polynomial(5)), 125);
  EXPECT_EQ(discriminant(cyclotomic_polynomial(7)), -16807);
}

TEST(PolyAlgebra, ExactDivisionAndPseudoRemainder) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial b = random_poly(rng, 1 + static_cast<int>(rng.below(std::uint64_t{4})), Integer(9), true);
    const IntPolynomial q = random_poly(rng, static_cast<int>(rng.below(std::uint64_t{5})), Integer(9));
    ASSERT_EQ(divide_exact_monic(b * q, b), q);
    const IntPolynomial a = random_poly(rng, 6, Integer(9));
    const IntPolynomial prem = pseudo_remainder(a, b);
    ASSERT_LT(prem.degree(), b.degree());
    // a - prem is divisible by the monic b (lc(b) = 1).
    ASSERT_NO_THROW(divide_exact_monic(a - prem, b));
  }
  EXPECT_THROW(divide_exact_monic(IntPolynomial{Integer(1), Integer(0), Integer(1)},
                                  IntPolynomial{Integer(-1), Integer(1)}),
               PreconditionError);
}

TEST(PolyAlgebra, RationalGcdAndInterpolation) {
  const RatPolynomial a = to_rational(IntPolynomial{Integer(2), Integer(-3), Integer(1)});  // (x-1)(x-2)
  const RatPolynomial b = to_rational(IntPolynomial{Integer(-3), Integer(2), Integer(1)});  // (x-1)(x+3)
  EXPECT_EQ(gcd(a, b), (RatPolynomial{Rational(-1), Rational(1)}));
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    const RatPolynomial p = to_rational(random_poly(rng, 5, Integer(50)));
    std::vector<Rational> xs, ys;
    for (int x = -3; x <= 2; ++x) {
      xs.emplace_back(x);
      ys.push_back(p.evaluate(Rational(x)));
    }
    ASSERT_EQ(interpolate(xs, ys), p);
    const auto [q, rem] = divmod(p, a);
    ASSERT_EQ(q * a + rem, p);
    ASSERT_LT(rem.degree(), 2);
  }
}
