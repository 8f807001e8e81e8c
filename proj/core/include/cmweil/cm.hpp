#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cmweil/numfield.hpp"

namespace cmweil {

enum class FamilyKind { Cyclotomic, QuarticCyclic, QuarticNonGalois };

std::string to_string(FamilyKind kind);

/// A CM-field from one of the supported families.
///
/// Embeddings are referred to by their index in the canonical EmbeddingSet
/// order; since every root is non-real, indices 2i and 2i+1 form the i-th
/// conjugate pair, positive imaginary part first.
///
/// For the Galois families, `automorphisms[j]` is sigma^j(theta) for a fixed
/// generator sigma of the (cyclic) Galois group, and `aut_embedding[j]` is the
/// index of the embedding phi_0 o sigma^j, where phi_0 is the embedding with
/// index `base_index`.
class CMFieldSpec {
 public:
  FieldPtr field;
  int g = 0;
  FamilyKind kind = FamilyKind::Cyclotomic;
  std::uint64_t m = 0;           // cyclotomic conductor
  std::uint64_t generator = 0;   // generator of (Z/m)^*, cyclotomic only
  Integer a, b, d;               // quartic parameters
  FieldElement conjugation;      // image of theta under complex conjugation
  FieldElement real_subfield_gen;
  std::vector<FieldElement> automorphisms;
  std::vector<std::size_t> aut_embedding;
  std::size_t base_index = 0;
  /// Cyclotomic only: exponent n such that root i is exp(2 pi i n / m).
  std::vector<std::uint64_t> exponent_of_index;

  bool is_galois() const { return kind != FamilyKind::QuarticNonGalois; }
  int degree() const { return 2 * g; }
  /// Text form accepted by parse_field_spec.
  std::string description() const;

  FieldElement conj(const FieldElement& x) const { return x.substitute(conjugation); }
  /// sigma^j(x) for Galois families.
  FieldElement apply_automorphism(const FieldElement& x, std::size_t j) const;
  /// Index of the embedding whose cyclotomic exponent is n.
  std::size_t index_of_exponent(std::uint64_t n) const;

  /// Canonical embeddings at no less than the requested precision (cached).
  std::shared_ptr<const EmbeddingSet> embeddings(mpfr_prec_t precision_bits = 128) const;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const EmbeddingSet> cache_;
};

using SpecPtr = std::shared_ptr<const CMFieldSpec>;

/// Q(zeta_m) with defining polynomial Phi_m; (Z/m)^* must be cyclic.
SpecPtr make_cyclotomic_cm(std::uint64_t m);
/// Q(sqrt(-a + b sqrt d)) with defining polynomial x^4 + 2a x^2 + (a^2 - b^2 d).
SpecPtr make_quartic_cm(const Integer& a, const Integer& b, const Integer& d);
/// Parses `cyclotomic:<m>` or `quartic:<a>,<b>,<d>`. Malformed text throws
/// std::invalid_argument; an unsupported field throws PreconditionError.
SpecPtr parse_field_spec(const std::string& text);

struct CMType {
  SpecPtr spec;
  /// Bit i set selects the second member (negative imaginary part) of pair i.
  std::uint32_t mask = 0;
  /// Selected embedding indices, ascending.
  std::vector<std::size_t> selected;
  bool primitive = true;
  /// Equivalence class under composition with automorphisms, numbered in
  /// order of first appearance in enumeration order.
  int equivalence_class = 0;
};

CMType cm_type_from_mask(const SpecPtr& spec, std::uint32_t mask);
/// Throws PreconditionError unless `indices` picks one member of each pair.
CMType cm_type_from_indices(const SpecPtr& spec, const std::vector<std::size_t>& indices);
/// Cyclotomic fields: Phi = {phi_n : n in exponents}, phi_n(zeta) = exp(2 pi i n/m).
CMType cm_type_from_exponents(const SpecPtr& spec, const std::vector<std::uint64_t>& exponents);
/// All 2^g CM-types in mask order, with primitivity and class labels.
std::vector<CMType> enumerate_cm_types(const SpecPtr& spec);
/// The first primitive type in enumeration order.
CMType auto_cm_type(const SpecPtr& spec);
bool is_primitive(const CMType& t);
/// Galois families: the set S of j with phi_0 o sigma^j in the type.
std::vector<std::size_t> galois_exponents(const CMType& t);
/// Labels used on the command line: cyclotomic exponents, otherwise indices.
std::vector<std::uint64_t> cm_type_labels(const CMType& t);

/// The reflex (K^, Psi) of a primitive CM-type, with the data needed to
/// evaluate Psi both complex-analytically and modulo r.
struct ReflexData {
  CMType type;
  SpecPtr reflex_spec;
  CMType reflex_type;
  int g = 0;
  int ghat = 0;
  /// Quartic non-Galois: scale u with theta^ = (x + y)/u for roots x, y of
  /// K's polynomial from different conjugate pairs. 1 otherwise.
  Integer scale{1};
  /// Galois: for each psi, the exponent j with psi = phi_0 o sigma^j.
  std::vector<std::size_t> psi_automorphisms;
  /// complex_corr[e] lists the K^-embedding indices whose xi-values multiply
  /// to the value of N_Psi(xi) at the K-embedding e.
  std::vector<std::vector<std::size_t>> complex_corr;

  /// Roots t_psi of K^'s polynomial mod r, one per psi, given the root t0 of
  /// K's polynomial that fixes the prime above r and the full list of roots
  /// of K's polynomial mod r.
  std::vector<Residue> residue_labels(const Residue& t0, const std::vector<Residue>& k_roots) const;
};

ReflexData reflex(const CMType& t);

/// N_Psi(xi) in K. Exact for Galois families, otherwise numeric with exact
/// verification.
FieldElement type_norm(const ReflexData& reflex, const FieldElement& xi);
/// Exact type norm for Galois families.
FieldElement type_norm_galois(const ReflexData& reflex, const FieldElement& xi);
/// Numeric reconstruction from complex embeddings, verified by
/// pi * conj(pi) = N(xi) and integrality. Throws PrecisionError after
/// `max_retries` precision doublings.
FieldElement type_norm_numeric(const ReflexData& reflex, const FieldElement& xi, int max_retries = 4);
/// N_Phi(x) = prod_{phi in Phi} phi(x) for a Galois family.
FieldElement type_norm_phi(const CMType& t, const FieldElement& x);

}  // namespace cmweil
