#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmweil/cm.hpp"

namespace cmweil {

/// Complete splitting of r in the reflex field, labeled by Psi.
struct SplitData {
  Integer r;
  /// Root of K's polynomial mod r fixing the prime above r (pi = 1 there).
  Residue k_root{Integer(0), Integer(2)};
  /// Its complex conjugate root.
  Residue k_root_conj{Integer(0), Integer(2)};
  /// (t_psi, conj t_psi) for each psi, in the order of ReflexData::psi order.
  std::vector<std::pair<Residue, Residue>> labeled_pairs;
  /// Inverse of the evaluation matrix at t_1, conj t_1, t_2, conj t_2, ...;
  /// row i gives power-basis coordinate i.
  std::vector<std::vector<Integer>> crt_basis;
};

/// Splits r and labels the roots. `base_root` selects the root of K's
/// polynomial (ascending order) that fixes the prime above r.
SplitData split_completely(const ReflexData& reflex, const Integer& r, std::size_t base_root = 0);

struct ResidueAssignment {
  std::vector<Residue> alphas;
  std::vector<Residue> betas;
  Residue zeta{Integer(1), Integer(2)};
};

/// alpha_1..alpha_{n-1}, beta_1..beta_{n-1} uniform in F_r^*, the last entries
/// forced so that prod(alpha) = 1 and prod(beta) = zeta.
ResidueAssignment sample_residues(Rng& rng, const Integer& r, int ghat, const Residue& zeta);

/// The unique xi with power-basis coordinates in (-r/2, r/2] reducing to
/// alpha_i at t_i and beta_i at conj t_i.
FieldElement lift_crt(const ReflexData& reflex, const SplitData& split, const ResidueAssignment& assign);

struct WeilNumber {
  SpecPtr spec;
  FieldElement pi;
  FieldElement xi;
  Integer q;
  Integer r;
  std::uint64_t k = 0;
  Integer group_order;
  double rho = 0;
  bool ordinary = false;
  bool generates_k = false;
  bool q_unramified = false;
  std::uint64_t iterations = 0;
};

struct ValidationReport {
  bool norm_equals_q = false;     // pi * conj(pi) = q
  bool absolute_values = false;   // |phi(pi)| = sqrt(q) at every embedding
  bool r_divides_order = false;   // r | N(pi - 1)
  bool embedding_degree = false;  // Phi_k(q) = 0 mod r, ord_r(q) = k, r does not divide qk
  bool generates_field = false;   // deg minpoly(pi) = 2g
  bool q_unramified = false;      // q does not divide disc of K's polynomial
  bool ordinary = false;          // gcd(N(pi + conj pi), q) = 1
  bool q_prime = false;

  bool all() const;
  /// (name, passed) in check order.
  std::vector<std::pair<std::string, bool>> checks() const;
};

ValidationReport validate_weil(const WeilNumber& w, mpfr_prec_t precision_bits = 256);

Integer group_order(const FieldElement& pi);
double rho(int g, const Integer& q, const Integer& r);

/// max over the vertices of the centered unit parallelotope of the largest
/// complex absolute value, for the power basis of the given field.
double max_vertex_modulus(const CMFieldSpec& spec);
/// 2 g ghat (1 + log M / log r).
double rho_bound(const ReflexData& reflex, const Integer& r);

struct ConstructOptions {
  std::uint64_t max_iters = 0;  // 0: 64 * ghat * bitlength(r)
  unsigned threads = 1;
  std::size_t base_root = 0;
};

/// Runs the randomized construction until a validated Weil number is found.
/// Throws MaxItersExceeded, or PreconditionError/NotSplitError on bad input.
WeilNumber construct_pi(const CMType& type, std::uint64_t k, const Integer& r, Rng& rng,
                        const ConstructOptions& options = {});

struct SearchOptions {
  /// Maximum number of candidates; BudgetExceeded is thrown above it.
  std::uint64_t budget = 100000000;
  unsigned threads = 1;
  std::size_t base_root = 0;
  /// Enumerate every primitive k-th root of unity rather than the smallest.
  bool all_zetas = false;
};

struct SearchWinner {
  Integer q;
  FieldElement xi;
  FieldElement pi;
  Integer group_order;
  double rho = 0;
  ResidueAssignment assignment;
};

struct SearchReport {
  std::uint64_t candidates = 0;
  std::uint64_t prime_count = 0;
  /// Primes rejected by the field-generation or ramification checks.
  std::uint64_t step8_failures = 0;
  std::optional<SearchWinner> winner;
  /// Bin start (multiple of 0.05, as an integer number of bins) to count.
  std::map<long, std::uint64_t> rho_histogram;
  static constexpr double kBinWidth = 0.05;
};

/// Enumerates all residue assignments for the fixed root(s) of unity.
SearchReport exhaustive_search(const CMType& type, std::uint64_t k, const Integer& r, const SearchOptions& options = {});

struct CocksPinchResult {
  Integer q;
  FieldElement pi;
  std::uint64_t candidates = 0;
};

/// Genus-one specialization over Q(sqrt(-d)): lifts the residues (1, zeta)
/// and scans translates by r in growing shells until the norm is prime.
CocksPinchResult cocks_pinch_g1(const Integer& d, std::uint64_t k, const Integer& r, Rng& rng,
                                std::uint64_t max_iters = 100000);

}  // namespace cmweil
