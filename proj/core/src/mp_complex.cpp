#include "cmweil/mp_complex.hpp"

#include <algorithm>

namespace cmweil {

MpReal::MpReal(mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_zero(x_, 1);
}

MpReal::MpReal(double v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_d(x_, v, MPFR_RNDN);
}

MpReal::MpReal(const Integer& v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
}

MpReal::MpReal(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
}

MpReal::MpReal(const MpReal& o) {
  mpfr_init2(x_, o.prec());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& o) noexcept {
  mpfr_init2(x_, o.prec());
  mpfr_swap(x_, o.x_);
}

MpReal& MpReal::operator=(const MpReal& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.prec());
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& o) noexcept {
  mpfr_swap(x_, o.x_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(x_); }

Integer MpReal::round() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), x_, MPFR_RNDN);
  return out;
}

MpReal MpReal::pi(mpfr_prec_t prec) {
  MpReal out(prec);
  mpfr_const_pi(out.x_, MPFR_RNDN);
  return out;
}

MpReal MpReal::pow2(long e, mpfr_prec_t prec) {
  MpReal out(prec);
  mpfr_set_ui_2exp(out.x_, 1, e, MPFR_RNDN);
  return out;
}

MpReal MpReal::operator-() const {
  MpReal out(prec());
  mpfr_neg(out.x_, x_, MPFR_RNDN);
  return out;
}

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal out(std::max(a.prec(), b.prec()));
  mpfr_add(out.x_, a.x_, b.x_, MPFR_RNDN);
  return out;
}

MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal out(std::max(a.prec(), b.prec()));
  mpfr_sub(out.x_, a.x_, b.x_, MPFR_RNDN);
  return out;
}

MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal out(std::max(a.prec(), b.prec()));
  mpfr_mul(out.x_, a.x_, b.x_, MPFR_RNDN);
  return out;
}

MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal out(std::max(a.prec(), b.prec()));
  mpfr_div(out.x_, a.x_, b.x_, MPFR_RNDN);
  return out;
}

MpReal sqrt(const MpReal& a) {
  MpReal out(a.prec());
  mpfr_sqrt(out.x_, a.x_, MPFR_RNDN);
  return out;
}

MpReal abs(const MpReal& a) {
  MpReal out(a.prec());
  mpfr_abs(out.x_, a.x_, MPFR_RNDN);
  return out;
}

MpReal cos(const MpReal& a) {
  MpReal out(a.prec());
  mpfr_cos(out.x_, a.x_, MPFR_RNDN);
  return out;
}

MpReal sin(const MpReal& a) {
  MpReal out(a.prec());
  mpfr_sin(out.x_, a.x_, MPFR_RNDN);
  return out;
}

MpComplex evaluate(const IntPolynomial& f, const MpComplex& z) {
  const mpfr_prec_t prec = z.prec();
  MpComplex acc(prec);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += MpReal(f[i], prec);
  }
  return acc;
}

}  // namespace cmweil
