#include "cmweil/numfield.hpp"

#include <algorithm>

#include "cmweil/error.hpp"
#include "cmweil/fp_poly.hpp"

namespace cmweil {

FieldPtr NumberField::create(IntPolynomial defining_poly) {
  return FieldPtr(new NumberField(std::move(defining_poly)));
}

NumberField::NumberField(IntPolynomial f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw PreconditionError("NumberField: defining polynomial must have degree >= 1");
  if (!f_.is_monic()) throw PreconditionError("NumberField: defining polynomial must be monic");
  disc_ = discriminant(f_);
  if (disc_ == 0) throw PreconditionError("NumberField: defining polynomial is not squarefree");
  const int n = f_.degree();
  // theta^n = -(f_0 + f_1 theta + ... + f_{n-1} theta^{n-1}).
  std::vector<Integer> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = -f_[i];
  for (int j = 0; j + 1 < n; ++j) {
    high_powers_.push_back(cur);
    // Multiply by theta.
    std::vector<Integer> next(n);
    const Integer top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < n; ++i) next[i] -= top * f_[i];
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Integer> numerators, Integer denominator)
    : field_(std::move(field)), num_(std::move(numerators)), den_(std::move(denominator)) {
  if (!field_) throw PreconditionError("FieldElement: null field");
  if (static_cast<int>(num_.size()) != field_->degree()) {
    throw PreconditionError("FieldElement: coordinate count does not match field degree");
  }
  if (den_ == 0) throw PreconditionError("FieldElement: zero denominator");
  normalize();
}

FieldElement FieldElement::from_integer(FieldPtr field, const Integer& c) {
  std::vector<Integer> num(field->degree(), Integer(0));
  num[0] = c;
  return FieldElement(std::move(field), std::move(num));
}

FieldElement FieldElement::from_rationals(FieldPtr field, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != field->degree()) {
    throw PreconditionError("FieldElement: coordinate count does not match field degree");
  }
  Integer den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num;
  num.reserve(coords.size());
  for (const auto& c : coords) num.push_back(c.get_num() * (den / c.get_den()));
  return FieldElement(std::move(field), std::move(num), std::move(den));
}

FieldElement FieldElement::theta(FieldPtr field, unsigned e) {
  FieldElement x = from_integer(field, 1);
  if (e == 0) return x;
  std::vector<Integer> num(field->degree(), Integer(0));
  if (field->degree() > 1) {
    num[1] = 1;
  } else {
    num[0] = -field->defining_poly()[0];
  }
  FieldElement t(field, std::move(num));
  return t.pow(e);
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

std::vector<Rational> FieldElement::coords() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coord(i));
  return out;
}

Rational FieldElement::coord(std::size_t i) const {
  Rational c(num_[i], den_);
  c.canonicalize();
  return c;
}

bool FieldElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool FieldElement::is_rational(Rational* value) const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  if (value) *value = coord(0);
  return true;
}

IntPolynomial FieldElement::numerator_poly() const { return IntPolynomial(num_); }

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field() || (a.field() != b.field() && a.field()->defining_poly() != b.field()->defining_poly())) {
    throw FieldMismatchError("field elements belong to different fields");
  }
}

FieldElement FieldElement::operator-() const {
  std::vector<Integer> num(num_);
  for (auto& c : num) c = -c;
  return FieldElement(field_, std::move(num), den_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Integer> num(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
    return FieldElement(a.field_, std::move(num), a.den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return FieldElement(a.field_, std::move(num), a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::size_t n = a.num_.size();
  std::vector<Integer> prod(2 * n - 1, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  const auto& table = a.field_->reduction_table();
  for (std::size_t j = n; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    const auto& row = table[j - n];
    for (std::size_t i = 0; i < n; ++i) mpz_addmul(prod[i].get_mpz_t(), prod[j].get_mpz_t(), row[i].get_mpz_t());
  }
  prod.resize(n);
  return FieldElement(a.field_, std::move(prod), a.den_ * b.den_);
}

FieldElement FieldElement::scaled(const Rational& s) const {
  std::vector<Integer> num(num_);
  for (auto& c : num) c *= s.get_num();
  return FieldElement(field_, std::move(num), den_ * s.get_den());
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = from_integer(field_, 1);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

FieldElement FieldElement::substitute(const FieldElement& image) const {
  FieldElement acc = from_integer(image.field(), 0);
  for (std::size_t i = num_.size(); i-- > 0;) {
    acc = acc * image + from_integer(image.field(), num_[i]);
  }
  return acc.scaled(Rational(1, den_));
}

MpComplex FieldElement::evaluate(const MpComplex& z) const {
  MpComplex v = cmweil::evaluate(numerator_poly(), z);
  if (den_ == 1) return v;
  MpReal d(den_, z.prec());
  return {v.re / d, v.im / d};
}

// ---------------------------------------------------------------------------
// Norms and polynomials

Rational norm(const FieldElement& a) {
  if (a.is_zero()) return 0;
  Integer res = resultant(a.field()->defining_poly(), a.numerator_poly());
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(a.degree()));
  Rational out(res, den);
  out.canonicalize();
  return out;
}

RatPolynomial charpoly(const FieldElement& a) {
  const int n = a.degree();
  std::vector<Rational> xs, ys;
  for (int x = 0; x <= n; ++x) {
    xs.emplace_back(x);
    ys.push_back(norm(FieldElement::from_integer(a.field(), Integer(x)) - a));
  }
  return interpolate(xs, ys);
}

RatPolynomial minimal_polynomial(const FieldElement& a) {
  RatPolynomial cp = charpoly(a);
  RatPolynomial g = gcd(cp, cp.derivative());
  return monic(divmod(cp, g).first);
}

bool is_algebraic_integer(const FieldElement& a) {
  if (a.is_integral()) return true;
  const RatPolynomial mp = minimal_polynomial(a);
  for (const auto& c : mp.coefficients()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational norm_by_determinant(const FieldElement& a) {
  const int n = a.degree();
  const FieldPtr& field = a.field();
  // Column j holds the coordinates of numerator * theta^j.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  FieldElement col(field, a.numerators());
  const FieldElement th = FieldElement::theta(field);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.numerators()[i];
    col = col * th;
  }
  // Bareiss fraction-free elimination.
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Integer det = sign * m[n - 1][n - 1];
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(n));
  Rational out(det, den);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Reduction modulo r

std::vector<Residue> roots_mod_r(const NumberField& field, const Integer& r) {
  if (!is_prime(r)) throw PreconditionError("roots_mod_r: modulus " + r.get_str() + " is not prime");
  if (field.disc_defining_poly() % r == 0) {
    throw PreconditionError("roots_mod_r: " + r.get_str() + " divides the discriminant of the defining polynomial");
  }
  FpPolyRing ring(r);
  std::vector<Residue> out;
  for (const auto& t : ring.roots(ring.reduce(field.defining_poly()))) out.emplace_back(t, r);
  return out;
}

Residue reduce_mod_root(const FieldElement& a, const Residue& t) {
  const Integer& r = t.modulus();
  if (a.denominator() % r == 0) {
    throw NonIntegralError("reduce_mod_root: denominator divisible by " + r.get_str());
  }
  Integer acc = 0;
  const auto& num = a.numerators();
  for (std::size_t i = num.size(); i-- > 0;) {
    acc = acc * t.value() + num[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), r.get_mpz_t());
  }
  if (!a.is_integral()) acc = mod(acc * invmod(a.denominator(), r), r);
  return Residue(acc, r);
}

}  // namespace cmweil
