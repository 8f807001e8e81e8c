#include "cmweil/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "cmweil/error.hpp"

namespace cmweil {

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(const Integer& value, const Integer& modulus) : modulus_(modulus) {
  if (modulus < 2) throw PreconditionError("Residue: modulus must be at least 2");
  value_ = mod(value, modulus);
}

Integer Residue::centered() const {
  Integer twice = 2 * value_;
  if (twice > modulus_) return value_ - modulus_;
  return value_;
}

Residue Residue::inverse() const { return Residue(invmod(value_, modulus_), modulus_); }

Residue Residue::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  return Residue(powmod(value_, e, modulus_), modulus_);
}

static void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) throw PreconditionError("Residue: modulus mismatch");
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.value_ * b.value_, a.modulus_);
}

// ---------------------------------------------------------------------------
// Modular helpers

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer powmod(const Integer& base, const Integer& exp, const Integer& m) {
  if (exp < 0) return powmod(invmod(base, m), -exp, m);
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer invmod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw PreconditionError("invmod: " + a.get_str() + " is not invertible mod " + m.get_str());
  }
  return r;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

std::optional<Integer> sqrt_mod(const Integer& a_in, const Integer& p) {
  Integer a = mod(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (mod(p, 4) == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  Integer q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  Integer c = powmod(z, q, p);
  Integer x = powmod(a, (q + 1) / 2, p);
  Integer t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, p);
      ++i;
    }
    Integer b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return x;
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

double log_integer(const Integer& n) {
  if (n <= 0) throw PreconditionError("log_integer: non-positive argument");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// ---------------------------------------------------------------------------
// Primality

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_witness64(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::uint32_t kTrialPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                          59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

bool mr_round(const Integer& n, const Integer& a, const Integer& d, unsigned s) {
  Integer x = powmod(a, d, n);
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mod(x * x, n);
    if (x == n1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t p : kTrialPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 127ULL * 127ULL) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases proven sufficient for all n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!mr_witness64(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (std::uint32_t p : small_primes(2000)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  if (!mr_round(n, Integer(2), d, s)) return false;
  Rng rng(mpz_getlimbn(n.get_mpz_t(), 0) ^ 0x5bd1e995ULL);
  const Integer hi = n - 2;
  for (int round = 1; round < 64; ++round) {
    if (!mr_round(n, rng.between(Integer(2), hi), d, s)) return false;
  }
  return true;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t limit) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(limit);
  if (it != cache.end()) return it->second;
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return cache.emplace(limit, std::move(primes)).first->second;
}

// ---------------------------------------------------------------------------
// Factoring

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          Integer diff = x - y;
          q = mod(q * abs(diff), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void add_factor(std::map<Integer, unsigned>& acc, const Integer& p, unsigned e = 1) { acc[p] += e; }

}  // namespace

Factorization factor_small(const Integer& n, std::uint32_t bound, Integer& cofactor) {
  Factorization out;
  cofactor = abs(n);
  if (cofactor == 0) return out;
  for (std::uint32_t p : small_primes(bound)) {
    if (cofactor == 1) break;
    if (Integer(p) * p > cofactor) {
      if (cofactor < bound) {
        out.push_back({cofactor, 1});
        cofactor = 1;
      }
      break;
    }
    if (!mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) {
      mpz_divexact_ui(cofactor.get_mpz_t(), cofactor.get_mpz_t(), p);
      ++e;
    }
    out.push_back({Integer(p), e});
  }
  return out;
}

Factorization factorize(const Integer& n) {
  Integer rest;
  Factorization small = factor_small(n, 1000000, rest);
  std::map<Integer, unsigned> acc;
  for (const auto& pp : small) add_factor(acc, pp.prime, pp.exponent);
  std::vector<Integer> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    Integer m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      add_factor(acc, m);
      continue;
    }
    Integer s;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
      stack.push_back(s);
      stack.push_back(s);
      continue;
    }
    Integer d = pollard_brent(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  Factorization out;
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

Integer multiplicative_order(const Integer& a, const Integer& r, const Factorization* r_minus_one) {
  const Integer a_mod = mod(a, r);
  if (a_mod == 0) throw PreconditionError("multiplicative_order: r divides a");
  Factorization computed;
  if (r_minus_one == nullptr) {
    computed = factorize(r - 1);
    r_minus_one = &computed;
  }
  Integer order = r - 1;
  for (const auto& pp : *r_minus_one) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (order % pp.prime != 0) break;
      Integer candidate = order / pp.prime;
      if (powmod(a_mod, candidate, r) != 1) break;
      order = candidate;
    }
  }
  if (powmod(a_mod, order, r) != 1) {
    throw PreconditionError("multiplicative_order: supplied factorization of r-1 is wrong");
  }
  return order;
}

bool has_order(const Integer& a, std::uint64_t k, const Integer& r) {
  const Integer a_mod = mod(a, r);
  if (a_mod == 0 || k == 0) return false;
  if (powmod(a_mod, Integer(static_cast<unsigned long>(k)), r) != 1) return false;
  for (std::uint64_t p : prime_divisors(k)) {
    if (powmod(a_mod, Integer(static_cast<unsigned long>(k / p)), r) == 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cyclotomic data

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

IntPolynomial cyclotomic_polynomial(std::uint64_t k) {
  if (k == 0) throw PreconditionError("cyclotomic_polynomial: k must be positive");
  // Phi_d for every divisor d of k, in increasing order, by
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  std::map<std::uint64_t, IntPolynomial> phi;
  for (std::uint64_t d : divisors(k)) {
    IntPolynomial p = IntPolynomial::monomial(Integer(1), d) - IntPolynomial::constant(Integer(1));
    for (std::uint64_t e : divisors(d)) {
      if (e == d) continue;
      p = divide_exact_monic(p, phi.at(e));
    }
    phi.emplace(d, std::move(p));
  }
  return phi.at(k);
}

Residue primitive_kth_root(const Integer& r, std::uint64_t k, Rng& rng) {
  if (k == 0 || (r - 1) % Integer(static_cast<unsigned long>(k)) != 0) {
    throw PreconditionError("primitive_kth_root: k does not divide r-1");
  }
  if (k == 1) return Residue(Integer(1), r);
  const Integer cofactor = (r - 1) / Integer(static_cast<unsigned long>(k));
  for (;;) {
    Integer g = rng.between(Integer(1), r - 1);
    Integer z = powmod(g, cofactor, r);
    if (has_order(z, k, r)) return Residue(z, r);
  }
}

std::vector<Residue> all_primitive_kth_roots(const Integer& r, std::uint64_t k) {
  if (k == 0 || (r - 1) % Integer(static_cast<unsigned long>(k)) != 0) {
    throw PreconditionError("all_primitive_kth_roots: k does not divide r-1");
  }
  // All k-th roots of unity are powers of one primitive root.
  Rng rng(0x6b43a9b5ULL);
  Residue zeta = primitive_kth_root(r, k, rng);
  std::vector<Residue> out;
  for (std::uint64_t e = 1; e <= k; ++e) {
    if (std::gcd(e, k) != 1) continue;
    out.push_back(zeta.pow(Integer(static_cast<unsigned long>(e))));
  }
  std::sort(out.begin(), out.end(), [](const Residue& a, const Residue& b) { return a.value() < b.value(); });
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c(p.coefficients());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int e = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    Integer q = r[i];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= q * b[j];
    --e;
  }
  if (e > 0) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : r) x *= scale;
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw PreconditionError("divide_exact_monic: divisor not monic");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw PreconditionError("divide_exact_monic: division not exact");
  }
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Integer c = r[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) throw PreconditionError("divide_exact_monic: division not exact");
  }
  return IntPolynomial(std::move(q));
}

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPolynomial divexact_scalar(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> c(p.coefficients());
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPolynomial(std::move(c));
}

}  // namespace

Integer resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (b_in.degree() == 0) return ipow(b_in.leading(), static_cast<unsigned long>(a_in.degree()));
  if (a_in.degree() == 0) return ipow(a_in.leading(), static_cast<unsigned long>(b_in.degree()));

  IntPolynomial a = a_in, b = b_in;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
  }
  const Integer ca = content(a), cb = content(b);
  a = divexact_scalar(a, ca);
  b = divexact_scalar(b, cb);
  const Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  Integer g = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divexact_scalar(r, g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      Integer num = ipow(b.leading(), da);
      Integer den = ipow(h, da - 1);
      Integer hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * t * hh;
    }
  }
}

Integer discriminant(const IntPolynomial& f) {
  if (!f.is_monic()) throw PreconditionError("discriminant: polynomial must be monic");
  const long n = f.degree();
  Integer r = resultant(f, f.derivative());
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> r(a.coefficients());
  const int db = b.degree();
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[i] * inv_lead;
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading();
  std::vector<Rational> c(p.coefficients());
  for (auto& x : c) x *= inv;
  return RatPolynomial(std::move(c));
}

RatPolynomial gcd(const RatPolynomial& a_in, const RatPolynomial& b_in) {
  RatPolynomial a = a_in, b = b_in;
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

RatPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolate: size mismatch");
  RatPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial{Rational(-xs[j]), Rational(1)};
      denom *= xs[i] - xs[j];
    }
    result = result + Rational(ys[i] / denom) * basis;
  }
  return result;
}

}  // namespace cmweil
