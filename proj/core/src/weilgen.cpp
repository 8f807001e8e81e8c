#include "cmweil/weilgen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "cmweil/error.hpp"
#include "cmweil/fp_poly.hpp"

namespace cmweil {

namespace {

// Inverts a square matrix modulo the prime r by Gauss-Jordan elimination.
std::vector<std::vector<Integer>> invert_mod(std::vector<std::vector<Integer>> a, const Integer& r) {
  const std::size_t n = a.size();
  std::vector<std::vector<Integer>> inv(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && mod(a[piv][col], r) == 0) ++piv;
    if (piv == n) throw Error("lift_crt: evaluation matrix is singular mod r");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const Integer s = invmod(a[col][col], r);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = mod(a[col][j] * s, r);
      inv[col][j] = mod(inv[col][j] * s, r);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Integer f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = mod(a[i][j] - f * a[col][j], r);
        inv[i][j] = mod(inv[i][j] - f * inv[col][j], r);
      }
    }
  }
  return inv;
}

Integer integer_norm(const FieldElement& x) {
  Rational n = norm(x);
  if (n.get_den() != 1) throw NonIntegralError("norm of a non-integral element");
  return n.get_num();
}

}  // namespace

// ---------------------------------------------------------------------------
// Splitting and lifting

SplitData split_completely(const ReflexData& reflex, const Integer& r, std::size_t base_root) {
  const CMFieldSpec& k_spec = *reflex.type.spec;
  const CMFieldSpec& h_spec = *reflex.reflex_spec;
  if (!is_prime(r)) throw PreconditionError("split_completely: r = " + r.get_str() + " is not prime");
  std::vector<Residue> k_roots = roots_mod_r(*k_spec.field, r);
  if (static_cast<int>(k_roots.size()) < k_spec.degree()) {
    throw NotSplitError("r = " + r.get_str() + " does not split completely in " + k_spec.description());
  }
  if (h_spec.field->disc_defining_poly() % r == 0) {
    throw PreconditionError("r = " + r.get_str() + " divides the discriminant of the reflex polynomial");
  }
  if (base_root >= k_roots.size()) throw PreconditionError("split_completely: base root index out of range");

  SplitData out;
  out.r = r;
  out.k_root = k_roots[base_root];
  out.k_root_conj = reduce_mod_root(k_spec.conjugation, out.k_root);
  const std::vector<Residue> labels = reflex.residue_labels(out.k_root, k_roots);

  FpPolyRing ring(r);
  const FpPoly fh = ring.reduce(h_spec.field->defining_poly());
  std::vector<Integer> points;
  std::set<Integer> distinct;
  for (const auto& t : labels) {
    Residue tc = reduce_mod_root(h_spec.conjugation, t);
    for (const Residue& x : {t, tc}) {
      if (ring.eval(fh, x.value()) != 0) throw Error("split_completely: label is not a root of the reflex polynomial");
      points.push_back(x.value());
      distinct.insert(x.value());
    }
    out.labeled_pairs.emplace_back(t, tc);
  }
  if (distinct.size() != points.size()) throw Error("split_completely: labeled roots are not distinct");

  const std::size_t n = points.size();
  std::vector<std::vector<Integer>> v(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v[i][j] = p;
      p = mod(p * points[i], r);
    }
  }
  out.crt_basis = invert_mod(std::move(v), r);
  return out;
}

ResidueAssignment sample_residues(Rng& rng, const Integer& r, int ghat, const Residue& zeta) {
  ResidueAssignment out;
  out.zeta = zeta;
  Residue pa(Integer(1), r), pb(Integer(1), r);
  for (int i = 0; i + 1 < ghat; ++i) {
    Residue a(rng.between(Integer(1), r - 1), r);
    Residue b(rng.between(Integer(1), r - 1), r);
    pa = pa * a;
    pb = pb * b;
    out.alphas.push_back(a);
    out.betas.push_back(b);
  }
  out.alphas.push_back(pa.inverse());
  out.betas.push_back(zeta * pb.inverse());
  return out;
}

FieldElement lift_crt(const ReflexData& reflex, const SplitData& split, const ResidueAssignment& assign) {
  const std::size_t n = split.crt_basis.size();
  if (assign.alphas.size() * 2 != n || assign.betas.size() * 2 != n) {
    throw PreconditionError("lift_crt: assignment size does not match the splitting");
  }
  std::vector<Integer> values;
  for (std::size_t i = 0; i < assign.alphas.size(); ++i) {
    values.push_back(assign.alphas[i].value());
    values.push_back(assign.betas[i].value());
  }
  std::vector<Integer> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += split.crt_basis[i][j] * values[j];
    coords[i] = Residue(acc, split.r).centered();
  }
  return FieldElement(reflex.reflex_spec->field, std::move(coords));
}

// ---------------------------------------------------------------------------
// Validation

bool ValidationReport::all() const {
  for (const auto& [name, ok] : checks()) {
    if (!ok) return false;
  }
  return true;
}

std::vector<std::pair<std::string, bool>> ValidationReport::checks() const {
  return {{"norm_equals_q", norm_equals_q},       {"absolute_values", absolute_values},
          {"r_divides_order", r_divides_order},   {"embedding_degree", embedding_degree},
          {"generates_field", generates_field},   {"q_unramified", q_unramified},
          {"ordinary", ordinary},                 {"q_prime", q_prime}};
}

Integer group_order(const FieldElement& pi) {
  return integer_norm(pi - FieldElement::from_integer(pi.field(), 1));
}

double rho(int g, const Integer& q, const Integer& r) { return g * log_integer(q) / log_integer(r); }

namespace {

bool absolute_values_ok(const WeilNumber& w, mpfr_prec_t prec) {
  std::size_t coeff_bits = bit_length(w.pi.denominator());
  for (const auto& c : w.pi.numerators()) coeff_bits = std::max(coeff_bits, bit_length(c));
  prec = std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(coeff_bits) + 128);
  auto emb = w.spec->embeddings(prec);
  prec = emb->precision_bits;
  const MpReal q(w.q, prec);
  const auto coords = w.pi.coords();
  for (std::size_t e = 0; e < emb->size(); ++e) {
    const MpComplex& z = emb->center[e];
    const MpReal& rad = emb->radius[e];
    MpComplex v = w.pi.evaluate(z);
    // |pi(z') - pi(z)| <= rad * sum i |c_i| (|z| + rad)^(i-1) for |z' - z| <= rad.
    MpReal zr = z.abs() + rad;
    MpReal err(prec), pw(1.0, prec);
    for (std::size_t i = 1; i < coords.size(); ++i) {
      err += MpReal(Rational(abs(coords[i]) * static_cast<long>(i)), prec) * pw;
      pw *= zr;
    }
    err = err * rad;
    MpReal mag = v.abs();
    MpReal slack = mag * mag * MpReal::pow2(-(prec - 24), prec);
    MpReal lo = mag - err;
    if (lo.sign() < 0) lo = MpReal(prec);
    MpReal hi = mag + err;
    if (lo * lo - slack > q || hi * hi + slack < q) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_weil(const WeilNumber& w, mpfr_prec_t precision_bits) {
  ValidationReport rep;
  const CMFieldSpec& spec = *w.spec;
  const FieldElement& pi = w.pi;
  const FieldElement q_elem = FieldElement::from_integer(spec.field, w.q);
  rep.q_prime = is_prime(w.q);
  rep.norm_equals_q = pi * spec.conj(pi) == q_elem;
  rep.absolute_values = w.q > 0 && absolute_values_ok(w, precision_bits);
  if (is_algebraic_integer(pi)) {
    rep.r_divides_order = w.r > 0 && group_order(pi) % w.r == 0;
  }
  if (w.r > 1 && w.k > 0) {
    const Integer rk = w.r;
    const bool coprime = w.q % rk != 0 && Integer(static_cast<unsigned long>(w.k)) % rk != 0;
    const FpPolyRing ring(rk);
    const bool cyclo = ring.eval(ring.reduce(cyclotomic_polynomial(w.k)), w.q) == 0;
    rep.embedding_degree = coprime && cyclo && has_order(w.q, w.k, rk);
  }
  rep.generates_field = minimal_polynomial(pi).degree() == spec.degree();
  rep.q_unramified = w.q != 0 && spec.field->disc_defining_poly() % w.q != 0;
  Rational trace_norm = norm(pi + spec.conj(pi));
  if (trace_norm.get_den() == 1 && w.q != 0) {
    Integer gcd_val;
    mpz_gcd(gcd_val.get_mpz_t(), trace_norm.get_num_mpz_t(), w.q.get_mpz_t());
    rep.ordinary = gcd_val == 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// rho bound

double max_vertex_modulus(const CMFieldSpec& spec) {
  const int n = spec.degree();
  if (n > 24) throw PreconditionError("max_vertex_modulus: degree too large for vertex enumeration");
  auto emb = spec.embeddings();
  double best = 0;
  for (std::size_t e = 0; e < emb->size(); ++e) {
    const double zr = emb->center[e].re.to_double();
    const double zi = emb->center[e].im.to_double();
    std::vector<double> pr(n), pim(n);
    double ar = 1, ai = 0;
    for (int i = 0; i < n; ++i) {
      pr[i] = ar;
      pim[i] = ai;
      const double nr = ar * zr - ai * zi;
      ai = ar * zi + ai * zr;
      ar = nr;
    }
    // Gray-code walk over the sign vectors, starting from all -1/2.
    std::vector<int> sign(n, -1);
    double sr = 0, si = 0;
    for (int i = 0; i < n; ++i) {
      sr -= 0.5 * pr[i];
      si -= 0.5 * pim[i];
    }
    best = std::max(best, std::hypot(sr, si));
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
      const int i = __builtin_ctzll(step);
      sign[i] = -sign[i];
      sr += sign[i] * pr[i];
      si += sign[i] * pim[i];
      best = std::max(best, std::hypot(sr, si));
    }
  }
  return best;
}

double rho_bound(const ReflexData& reflex, const Integer& r) {
  const double m = max_vertex_modulus(*reflex.reflex_spec);
  return 2.0 * reflex.g * reflex.ghat * (1 + std::log(m) / log_integer(r));
}

// ---------------------------------------------------------------------------
// Main construction

WeilNumber construct_pi(const CMType& type, std::uint64_t k, const Integer& r, Rng& rng,
                        const ConstructOptions& options) {
  const CMFieldSpec& spec = *type.spec;
  if (spec.degree() < 4) throw PreconditionError("construct_pi: needs 2g >= 4; use cocks_pinch_g1 for g = 1");
  if (k == 0) throw PreconditionError("construct_pi: k must be positive");
  if (!is_prime(r)) throw PreconditionError("construct_pi: r = " + r.get_str() + " is not prime");
  if ((r - 1) % Integer(static_cast<unsigned long>(k)) != 0) {
    throw PreconditionError("construct_pi: k = " + std::to_string(k) + " does not divide r - 1");
  }
  const ReflexData rx = reflex(type);
  const SplitData split = split_completely(rx, r, options.base_root);
  const std::uint64_t max_iters =
      options.max_iters ? options.max_iters : 64ULL * rx.ghat * bit_length(r);
  const Integer& disc = spec.field->disc_defining_poly();
  const Rng master(rng.next_u64());

  std::atomic<std::uint64_t> counter{0};
  std::atomic<bool> found{false};
  std::mutex result_mutex;
  std::optional<WeilNumber> result;
  std::exception_ptr failure;

  auto worker = [&](unsigned id) {
    try {
      Rng local = master.split(id);
      while (!found.load()) {
        const std::uint64_t it = ++counter;
        if (it > max_iters) return;
        const Residue zeta = primitive_kth_root(r, k, local);
        const ResidueAssignment assign = sample_residues(local, r, rx.ghat, zeta);
        const FieldElement xi = lift_crt(rx, split, assign);
        const Integer q = integer_norm(xi);
        if (!is_prime(q)) continue;
        if (disc % q == 0) continue;
        FieldElement pi = type_norm(rx, xi);
        if (minimal_polynomial(pi).degree() != spec.degree()) continue;
        WeilNumber w;
        w.spec = type.spec;
        w.pi = std::move(pi);
        w.xi = xi;
        w.q = q;
        w.r = r;
        w.k = k;
        w.group_order = group_order(w.pi);
        w.rho = rho(spec.g, q, r);
        const ValidationReport rep = validate_weil(w);
        if (!rep.all()) continue;
        w.ordinary = rep.ordinary;
        w.generates_k = rep.generates_field;
        w.q_unramified = rep.q_unramified;
        w.iterations = it;
        std::lock_guard<std::mutex> lock(result_mutex);
        if (!result) {
          result = std::move(w);
          found.store(true);
        }
        return;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(result_mutex);
      if (!failure) failure = std::current_exception();
      found.store(true);
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (!result) throw MaxItersExceeded("construct_pi: no Weil number after " + std::to_string(max_iters) + " iterations");
  return std::move(*result);
}

}  // namespace cmweil
