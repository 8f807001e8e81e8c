#include "cmweil/jacobian.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>

#include "cmweil/arith.hpp"
#include "cmweil/error.hpp"

namespace cmweil {

namespace {

FpPoly derivative(const FpPolyRing& ring, const FpPoly& a) {
  FpPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mod(a[i] * static_cast<unsigned long>(i), ring.modulus()));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

FpPoly normalize_input(const Integer& q, const std::vector<Integer>& coefficients) {
  FpPoly f;
  for (const auto& c : coefficients) f.push_back(mod(c, q));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(const Integer& q, const std::vector<Integer>& coefficients)
    : ring_(q), f_(normalize_input(q, coefficients)) {
  if (q == 2 || !is_prime(q)) throw PreconditionError("HyperellipticCurve: q must be an odd prime");
  const int deg = FpPolyRing::degree(f_);
  if (deg < 3 || deg % 2 == 0) throw PreconditionError("HyperellipticCurve: f must have odd degree >= 3");
  if (f_.back() != 1) throw PreconditionError("HyperellipticCurve: f must be monic");
  if (FpPolyRing::degree(ring_.gcd(f_, derivative(ring_, f_))) > 0) {
    throw PreconditionError("HyperellipticCurve: f is not squarefree mod q");
  }
  genus_ = (deg - 1) / 2;
}

HyperellipticCurve HyperellipticCurve::parse(const std::string& text) {
  const std::string prefix = "hyperelliptic:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("curve spec must start with hyperelliptic:");
  const std::string rest = text.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("curve spec must be hyperelliptic:<q>:<coefficients>");
  Integer q;
  std::vector<Integer> coeffs;
  try {
    q = Integer(rest.substr(0, colon));
    std::stringstream ss(rest.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.emplace_back(item);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed curve spec: " + text);
  }
  return HyperellipticCurve(q, coeffs);
}

std::string HyperellipticCurve::to_string() const {
  std::string out = "hyperelliptic:" + q().get_str() + ":";
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (i) out += ",";
    out += f_[i].get_str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group law

MumfordDivisor identity_divisor() { return MumfordDivisor{}; }

bool is_valid(const MumfordDivisor& d, const HyperellipticCurve& curve) {
  const FpPolyRing& ring = curve.ring();
  if (d.u.empty() || d.u.back() != 1) return false;
  const int du = FpPolyRing::degree(d.u);
  if (du > curve.genus() || FpPolyRing::degree(d.v) >= du) return false;
  for (const auto& c : d.u) {
    if (c < 0 || c >= curve.q()) return false;
  }
  return ring.rem(ring.sub(ring.mul(d.v, d.v), curve.f()), d.u).empty();
}

MumfordDivisor negate(const MumfordDivisor& d, const HyperellipticCurve& curve) {
  return MumfordDivisor{d.u, curve.ring().neg(d.v)};
}

MumfordDivisor divisor_add(const MumfordDivisor& a, const MumfordDivisor& b, const HyperellipticCurve& curve) {
  const FpPolyRing& ring = curve.ring();
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  // Composition.
  const auto g1 = ring.xgcd(a.u, b.u);  // d1 = e1 u1 + e2 u2
  const auto g2 = ring.xgcd(g1.d, ring.add(a.v, b.v));  // d = c1 d1 + c2 (v1 + v2)
  const FpPoly& d = g2.d;
  const FpPoly s1 = ring.mul(g2.s, g1.s);
  const FpPoly s2 = ring.mul(g2.s, g1.t);
  const FpPoly& s3 = g2.t;
  FpPoly u = ring.mul(a.u, b.u);
  if (FpPolyRing::degree(d) > 0) u = ring.quo(u, ring.mul(d, d));
  FpPoly num = ring.add(ring.add(ring.mul(ring.mul(s1, a.u), b.v), ring.mul(ring.mul(s2, b.u), a.v)),
                        ring.mul(s3, ring.add(ring.mul(a.v, b.v), curve.f())));
  FpPoly v = ring.quo(num, d);
  u = ring.make_monic(u);
  v = ring.rem(v, u);
  // Reduction.
  while (FpPolyRing::degree(u) > curve.genus()) {
    FpPoly u2 = ring.quo(ring.sub(curve.f(), ring.mul(v, v)), u);
    u = ring.make_monic(u2);
    v = ring.rem(ring.neg(v), u);
  }
  return MumfordDivisor{u, v};
}

MumfordDivisor scalar_mul(const Integer& n, const MumfordDivisor& d, const HyperellipticCurve& curve) {
  if (n < 0) return scalar_mul(-n, negate(d, curve), curve);
  MumfordDivisor acc = identity_divisor();
  for (std::size_t i = bit_length(n); i-- > 0;) {
    acc = divisor_add(acc, acc, curve);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = divisor_add(acc, d, curve);
  }
  return acc;
}

MumfordDivisor random_divisor(const HyperellipticCurve& curve, Rng& rng) {
  const FpPolyRing& ring = curve.ring();
  const Integer& q = curve.q();
  MumfordDivisor acc = identity_divisor();
  for (int i = 0; i < curve.genus(); ++i) {
    for (;;) {
      const Integer x = rng.below(q);
      auto y = sqrt_mod(ring.eval(curve.f(), x), q);
      if (!y) continue;
      Integer yy = (rng.next_u64() & 1) ? mod(-*y, q) : *y;
      MumfordDivisor pt{ring.linear(x), ring.constant(yy)};
      acc = divisor_add(acc, pt, curve);
      break;
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Order checks

std::pair<Integer, Integer> weil_interval(const Integer& q, int g) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bit_length(q) * g + 128);
  mpfr_t s, lo, hi;
  mpfr_inits2(prec, s, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(s, q.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(s, s, MPFR_RNDN);
  mpfr_sub_ui(lo, s, 1, MPFR_RNDN);
  mpfr_add_ui(hi, s, 1, MPFR_RNDN);
  mpfr_pow_ui(lo, lo, static_cast<unsigned long>(2 * g), MPFR_RNDN);
  mpfr_pow_ui(hi, hi, static_cast<unsigned long>(2 * g), MPFR_RNDN);
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clears(s, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return {a, b};
}

namespace {

Factorization factor_for_order(const Integer& n) {
  Integer cofactor;
  Factorization f = factor_small(n, 1000000, cofactor);
  if (cofactor == 1) return f;
  if (is_prime(cofactor) || bit_length(cofactor) > 128) {
    // An unfactored composite cofactor is treated as a single factor.
    f.push_back({cofactor, 1});
    return f;
  }
  for (const auto& pp : factorize(cofactor)) f.push_back(pp);
  return f;
}

Integer ipow(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

OrderCheckResult probable_order_check_report(const HyperellipticCurve& curve, const Integer& n, int trials, Rng& rng) {
  if (n < 1 || trials < 1) throw PreconditionError("probable_order_check: need N >= 1 and trials >= 1");
  OrderCheckResult res;
  const auto [lo, hi] = weil_interval(curve.q(), curve.genus());
  res.in_weil_interval = lo <= n && n <= hi;
  if (!res.in_weil_interval) return res;
  const Factorization fac = factor_for_order(n);
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    const MumfordDivisor d = random_divisor(curve, rng);
    if (!scalar_mul(n, d, curve).is_identity()) return res;
    ++res.trials_killed;
    // Order of d: for each prime power l^e || N, the l-part is found by
    // multiplying [N / l^e] D by l until it vanishes.
    Integer order = 1;
    for (const auto& pp : fac) {
      const Integer le = ipow(pp.prime, pp.exponent);
      MumfordDivisor x = scalar_mul(n / le, d, curve);
      unsigned k = 0;
      while (!x.is_identity()) {
        x = scalar_mul(pp.prime, x, curve);
        ++k;
      }
      order *= ipow(pp.prime, k);
    }
    mpz_lcm(res.exponent_lower_bound.get_mpz_t(), res.exponent_lower_bound.get_mpz_t(), order.get_mpz_t());
  }
  const Integer& e = res.exponent_lower_bound;
  Integer below;
  mpz_fdiv_q(below.get_mpz_t(), Integer(lo - 1).get_mpz_t(), e.get_mpz_t());
  res.multiples_in_interval = hi / e - below;
  res.passed = res.multiples_in_interval == 1;
  return res;
}

bool probable_order_check(const HyperellipticCurve& curve, const Integer& n, int trials, Rng& rng) {
  return probable_order_check_report(curve, n, trials, rng).passed;
}

std::optional<Integer> twist_search(unsigned p, const Integer& target_order, const Integer& q, const Integer& a_bound,
                                    Rng& rng, int trials) {
  if (p < 3 || p % 2 == 0) throw PreconditionError("twist_search: p must be an odd integer >= 3");
  if (!is_prime(q) || (q - 1) % p != 0) throw PreconditionError("twist_search: q must be a prime with q = 1 mod p");
  for (Integer a = 1; a <= a_bound; ++a) {
    if (a % q == 0) continue;
    std::vector<Integer> coeffs(p + 1, Integer(0));
    coeffs[0] = a;
    coeffs[p] = 1;
    HyperellipticCurve curve(q, coeffs);
    if (probable_order_check(curve, target_order, trials, rng)) return a;
  }
  return std::nullopt;
}

}  // namespace cmweil
