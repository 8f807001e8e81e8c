#pragma once

#include <utility>
#include <vector>

#include "cmweil/polynomial.hpp"
#include "cmweil/rng.hpp"

namespace cmweil {

/// Dense polynomial over F_p: coefficients in [0, p), lowest degree first,
/// no trailing zeros. The empty vector is the zero polynomial.
using FpPoly = std::vector<Integer>;

/// Arithmetic in F_p[x] for a fixed odd or even prime p.
class FpPolyRing {
 public:
  explicit FpPolyRing(Integer p);

  const Integer& modulus() const { return p_; }

  static int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

  FpPoly reduce(const IntPolynomial& a) const;
  FpPoly constant(const Integer& c) const;
  /// x - c
  FpPoly linear(const Integer& c) const;

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly neg(const FpPoly& a) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, const Integer& c) const;

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const;
  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly quo(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).first; }

  FpPoly make_monic(const FpPoly& a) const;
  /// Monic gcd (zero if both inputs are zero).
  FpPoly gcd(const FpPoly& a, const FpPoly& b) const;

  struct Xgcd {
    FpPoly d, s, t;  // d = s*a + t*b, d monic
  };
  Xgcd xgcd(const FpPoly& a, const FpPoly& b) const;

  FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const;
  Integer eval(const FpPoly& a, const Integer& x) const;

  /// Distinct roots in F_p, ascending.
  std::vector<Integer> roots(const FpPoly& f) const;

 private:
  void trim(FpPoly& a) const;
  void split_roots(const FpPoly& f, Rng& rng, std::vector<Integer>& out) const;

  Integer p_;
};

}  // namespace cmweil
