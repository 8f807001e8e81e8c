#include "cmweil/fp_poly.hpp"

#include <algorithm>

#include "cmweil/arith.hpp"
#include "cmweil/error.hpp"

namespace cmweil {

FpPolyRing::FpPolyRing(Integer p) : p_(std::move(p)) {
  if (p_ < 2) throw PreconditionError("FpPolyRing: modulus must be at least 2");
}

void FpPolyRing::trim(FpPoly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly FpPolyRing::reduce(const IntPolynomial& a) const {
  FpPoly out;
  out.reserve(a.size());
  for (const auto& c : a.coefficients()) out.push_back(mod(c, p_));
  trim(out);
  return out;
}

FpPoly FpPolyRing::constant(const Integer& c) const {
  FpPoly out{mod(c, p_)};
  trim(out);
  return out;
}

FpPoly FpPolyRing::linear(const Integer& c) const { return FpPoly{mod(-c, p_), Integer(1)}; }

FpPoly FpPolyRing::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer s = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
    if (s >= p_) s -= p_;
    out[i] = std::move(s);
  }
  trim(out);
  return out;
}

FpPoly FpPolyRing::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Integer s = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
    if (s < 0) s += p_;
    out[i] = std::move(s);
  }
  trim(out);
  return out;
}

FpPoly FpPolyRing::neg(const FpPoly& a) const {
  FpPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] == 0 ? Integer(0) : Integer(p_ - a[i]);
  return out;
}

FpPoly FpPolyRing::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (auto& c : out) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
  trim(out);
  return out;
}

FpPoly FpPolyRing::scale(const FpPoly& a, const Integer& c) const {
  FpPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] * c, p_);
  trim(out);
  return out;
}

std::pair<FpPoly, FpPoly> FpPolyRing::divmod(const FpPoly& a, const FpPoly& b) const {
  if (b.empty()) throw PreconditionError("FpPolyRing::divmod: division by zero");
  if (a.size() < b.size()) return {FpPoly{}, a};
  FpPoly r = a;
  const std::size_t db = b.size() - 1;
  FpPoly q(a.size() - db, Integer(0));
  const Integer inv = invmod(b.back(), p_);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = mod(r[i] * inv, p_);
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
      mpz_mod(r[i - db + j].get_mpz_t(), r[i - db + j].get_mpz_t(), p_.get_mpz_t());
    }
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

FpPoly FpPolyRing::make_monic(const FpPoly& a) const {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, invmod(a.back(), p_));
}

FpPoly FpPolyRing::gcd(const FpPoly& a_in, const FpPoly& b_in) const {
  FpPoly a = a_in, b = b_in;
  while (!b.empty()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

FpPolyRing::Xgcd FpPolyRing::xgcd(const FpPoly& a, const FpPoly& b) const {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{Integer(1)}, s1{};
  FpPoly t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s2 = sub(s0, mul(q, s1));
    FpPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Integer inv = invmod(r0.back(), p_);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

FpPoly FpPolyRing::powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const {
  FpPoly result = rem(FpPoly{Integer(1)}, m);
  FpPoly b = rem(base, m);
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

Integer FpPolyRing::eval(const FpPoly& a, const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * x + a[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p_.get_mpz_t());
  }
  return acc;
}

void FpPolyRing::split_roots(const FpPoly& f, Rng& rng, std::vector<Integer>& out) const {
  // f is monic, squarefree, and a product of distinct linear factors.
  const int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(mod(-f[0], p_));
    return;
  }
  if (p_ == 2) {
    for (int x = 0; x < 2; ++x) {
      if (eval(f, Integer(x)) == 0) out.emplace_back(x);
    }
    return;
  }
  const Integer half = (p_ - 1) / 2;
  for (;;) {
    Integer a = rng.below(p_);
    FpPoly h = powmod(FpPoly{a, Integer(1)}, half, f);
    h = sub(h, FpPoly{Integer(1)});
    FpPoly g = gcd(h, f);
    const int dg = degree(g);
    if (dg <= 0 || dg == d) continue;
    split_roots(g, rng, out);
    split_roots(quo(f, g), rng, out);
    return;
  }
}

std::vector<Integer> FpPolyRing::roots(const FpPoly& f_in) const {
  if (f_in.empty()) throw PreconditionError("FpPolyRing::roots: zero polynomial");
  std::vector<Integer> out;
  if (p_ < 4096) {
    const unsigned long p = p_.get_ui();
    for (unsigned long x = 0; x < p; ++x) {
      if (eval(f_in, Integer(x)) == 0) out.emplace_back(x);
    }
    return out;
  }
  FpPoly f = make_monic(f_in);
  // Product of the distinct linear factors: gcd(x^p - x, f).
  FpPoly xp = powmod(FpPoly{Integer(0), Integer(1)}, p_, f);
  FpPoly lin = gcd(sub(xp, FpPoly{Integer(0), Integer(1)}), f);
  Rng rng(mpz_getlimbn(p_.get_mpz_t(), 0));
  split_roots(lin, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmweil
