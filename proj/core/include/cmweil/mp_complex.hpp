#pragma once

#include <mpfr.h>

#include "cmweil/polynomial.hpp"

namespace cmweil {

/// RAII wrapper over mpfr_t. Binary operations round to nearest at the larger
/// of the operand precisions.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 64);
  MpReal(double v, mpfr_prec_t prec);
  MpReal(const Integer& v, mpfr_prec_t prec);
  MpReal(const Rational& v, mpfr_prec_t prec);
  MpReal(const MpReal& o);
  MpReal(MpReal&& o) noexcept;
  MpReal& operator=(const MpReal& o);
  MpReal& operator=(MpReal&& o) noexcept;
  ~MpReal();

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// Nearest integer.
  Integer round() const;
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  static MpReal pi(mpfr_prec_t prec);
  /// 2^e at the given precision.
  static MpReal pow2(long e, mpfr_prec_t prec);

  MpReal operator-() const;
  friend MpReal operator+(const MpReal& a, const MpReal& b);
  friend MpReal operator-(const MpReal& a, const MpReal& b);
  friend MpReal operator*(const MpReal& a, const MpReal& b);
  friend MpReal operator/(const MpReal& a, const MpReal& b);
  MpReal& operator+=(const MpReal& b) { return *this = *this + b; }
  MpReal& operator-=(const MpReal& b) { return *this = *this - b; }
  MpReal& operator*=(const MpReal& b) { return *this = *this * b; }

  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

  friend MpReal sqrt(const MpReal& a);
  friend MpReal abs(const MpReal& a);
  friend MpReal cos(const MpReal& a);
  friend MpReal sin(const MpReal& a);

 private:
  mpfr_t x_;
};

/// Complex number as a pair of MpReal.
struct MpComplex {
  MpReal re;
  MpReal im;

  explicit MpComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  /// Real embedding of an integer or rational.
  MpComplex(const Integer& v, mpfr_prec_t prec) : re(v, prec), im(prec) {}
  MpComplex(const Rational& v, mpfr_prec_t prec) : re(v, prec), im(prec) {}

  mpfr_prec_t prec() const { return re.prec(); }

  MpComplex conj() const { return {re, -im}; }
  /// |z|^2
  MpReal norm() const { return re * re + im * im; }
  MpReal abs() const { return sqrt(norm()); }

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    MpReal d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  MpComplex operator-() const { return {-re, -im}; }
};

/// f(z) by Horner's rule for an integer polynomial.
MpComplex evaluate(const IntPolynomial& f, const MpComplex& z);

}  // namespace cmweil
