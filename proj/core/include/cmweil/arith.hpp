#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmweil/polynomial.hpp"
#include "cmweil/rng.hpp"

namespace cmweil {

/// An element of Z/mZ, stored as its least nonnegative representative.
class Residue {
 public:
  Residue(const Integer& value, const Integer& modulus);

  const Integer& value() const { return value_; }
  const Integer& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  /// Representative in (-m/2, m/2].
  Integer centered() const;

  Residue inverse() const;
  Residue pow(const Integer& e) const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  Integer value_;
  Integer modulus_;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 1;
};
using Factorization = std::vector<PrimePower>;

// ---- elementary modular arithmetic --------------------------------------

Integer mod(const Integer& a, const Integer& m);
Integer powmod(const Integer& base, const Integer& exp, const Integer& m);
/// Throws PreconditionError when a is not invertible mod m.
Integer invmod(const Integer& a, const Integer& m);
/// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt if a is
/// a non-residue.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);
/// Legendre symbol (a/p) for odd prime p.
int legendre(const Integer& a, const Integer& p);
std::size_t bit_length(const Integer& n);
/// Natural logarithm of a positive integer of any size.
double log_integer(const Integer& n);
bool is_perfect_square(const Integer& n);

// ---- primality and factoring ---------------------------------------------

/// Deterministic below 2^64; above, 64 Miller-Rabin rounds with bases drawn
/// from a generator seeded by n itself (error < 2^-128, reproducible).
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Primes below `limit` by sieve.
const std::vector<std::uint32_t>& small_primes(std::uint32_t limit = 1000000);

/// Complete factorization: trial division below 10^6, then Pollard-Brent.
Factorization factorize(const Integer& n);
/// Splits off the part of n composed of primes below `bound`; returns the
/// factored part and sets `cofactor` to what remains.
Factorization factor_small(const Integer& n, std::uint32_t bound, Integer& cofactor);

/// Multiplicative order of a modulo the prime r. The factorization of r-1 is
/// computed unless supplied.
Integer multiplicative_order(const Integer& a, const Integer& r,
                             const Factorization* r_minus_one = nullptr);
/// True iff a has multiplicative order exactly k modulo r.
bool has_order(const Integer& a, std::uint64_t k, const Integer& r);

// ---- cyclotomic data ------------------------------------------------------

IntPolynomial cyclotomic_polynomial(std::uint64_t k);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A random element of exact order k in F_r^*.
Residue primitive_kth_root(const Integer& r, std::uint64_t k, Rng& rng);
/// All elements of exact order k in F_r^*, ascending.
std::vector<Residue> all_primitive_kth_roots(const Integer& r, std::uint64_t k);

// ---- integer polynomial algebra -------------------------------------------

Integer content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Quotient of a by a monic b; throws if the division is not exact.
IntPolynomial divide_exact_monic(const IntPolynomial& a, const IntPolynomial& b);
/// Resultant via the subresultant pseudo-remainder sequence.
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);
/// Discriminant of a monic polynomial.
Integer discriminant(const IntPolynomial& f);

RatPolynomial to_rational(const IntPolynomial& p);
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic(const RatPolynomial& p);
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
/// The unique polynomial of degree < xs.size() through the points.
RatPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace cmweil
