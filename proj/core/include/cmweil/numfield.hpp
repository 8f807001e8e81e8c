#pragma once

#include <memory>
#include <vector>

#include "cmweil/arith.hpp"
#include "cmweil/mp_complex.hpp"

namespace cmweil {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(theta) with theta a root of a monic, squarefree integer polynomial.
/// Elements are represented in the power basis 1, theta, ..., theta^(n-1).
class NumberField {
 public:
  static FieldPtr create(IntPolynomial defining_poly);

  const IntPolynomial& defining_poly() const { return f_; }
  int degree() const { return f_.degree(); }
  const Integer& disc_defining_poly() const { return disc_; }

  /// Power-basis coordinates of theta^(n+j), for j = 0 .. n-2.
  const std::vector<std::vector<Integer>>& reduction_table() const { return high_powers_; }

 private:
  explicit NumberField(IntPolynomial f);

  IntPolynomial f_;
  Integer disc_;
  std::vector<std::vector<Integer>> high_powers_;
};

/// An element of a NumberField: integer numerators over a common positive
/// denominator, kept in lowest terms.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Integer> numerators, Integer denominator = 1);

  static FieldElement from_integer(FieldPtr field, const Integer& c);
  static FieldElement from_rationals(FieldPtr field, const std::vector<Rational>& coords);
  /// theta^e (e >= 0).
  static FieldElement theta(FieldPtr field, unsigned e = 1);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(num_.size()); }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  std::vector<Rational> coords() const;
  Rational coord(std::size_t i) const;

  bool is_integral() const { return den_ == 1; }
  bool is_zero() const;
  /// True iff the element lies in Q; `value` receives it.
  bool is_rational(Rational* value = nullptr) const;

  /// Numerator polynomial, so that this == numerator_poly(theta) / denominator.
  IntPolynomial numerator_poly() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement scaled(const Rational& s) const;
  FieldElement pow(unsigned e) const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// The image of this element under theta -> image (a Q-algebra map).
  FieldElement substitute(const FieldElement& image) const;

  /// Value at the complex number z (z an approximation of a root of the
  /// defining polynomial).
  MpComplex evaluate(const MpComplex& z) const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_{1};
};

void require_same_field(const FieldElement& a, const FieldElement& b);

/// Exact norm to Q via the resultant.
Rational norm(const FieldElement& a);
/// Characteristic polynomial of multiplication by a.
RatPolynomial charpoly(const FieldElement& a);
/// Monic minimal polynomial over Q.
RatPolynomial minimal_polynomial(const FieldElement& a);
/// True iff the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const FieldElement& a);
/// Norm via the determinant of the multiplication matrix (fraction-free
/// elimination). Independent of the resultant route; used for cross-checks.
Rational norm_by_determinant(const FieldElement& a);

/// Roots of the defining polynomial modulo the prime r, ascending. Throws
/// PreconditionError if r divides the discriminant of the defining
/// polynomial.
std::vector<Residue> roots_mod_r(const NumberField& field, const Integer& r);

/// Image of a under the reduction map attached to the root t of the defining
/// polynomial mod r. The denominator of a must be prime to r.
Residue reduce_mod_root(const FieldElement& a, const Residue& t);

/// Certified enclosures of the complex roots of a defining polynomial.
///
/// Each root lies in the disc of radius `radius[i]` about `center[i]`; the
/// discs are pairwise disjoint. Order is canonical: by real part, then by
/// absolute imaginary part, the member with positive imaginary part first.
struct EmbeddingSet {
  FieldPtr field;
  mpfr_prec_t precision_bits = 0;
  std::vector<MpComplex> center;
  std::vector<MpReal> radius;

  std::size_t size() const { return center.size(); }
  /// Index of the root nearest to z.
  std::size_t nearest(const MpComplex& z) const;
  /// Index of the complex conjugate of root i.
  std::size_t conjugate_index(std::size_t i) const;
};

/// Throws PrecisionError if isolation fails at the requested precision.
EmbeddingSet complex_embeddings(const FieldPtr& field, mpfr_prec_t precision_bits);

}  // namespace cmweil
