#include "cmweil/cm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cmweil/error.hpp"

namespace cmweil {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Cyclotomic:
      return "cyclotomic";
    case FamilyKind::QuarticCyclic:
      return "quartic-cyclic";
    case FamilyKind::QuarticNonGalois:
      return "quartic-non-galois";
  }
  return "unknown";
}

std::string CMFieldSpec::description() const {
  if (kind == FamilyKind::Cyclotomic) return "cyclotomic:" + std::to_string(m);
  return "quartic:" + a.get_str() + "," + b.get_str() + "," + d.get_str();
}

FieldElement CMFieldSpec::apply_automorphism(const FieldElement& x, std::size_t j) const {
  if (!is_galois()) throw PreconditionError("apply_automorphism: field is not Galois");
  return x.substitute(automorphisms.at(j % automorphisms.size()));
}

std::size_t CMFieldSpec::index_of_exponent(std::uint64_t n) const {
  for (std::size_t i = 0; i < exponent_of_index.size(); ++i) {
    if (exponent_of_index[i] == n % m) return i;
  }
  throw PreconditionError("index_of_exponent: " + std::to_string(n) + " is not a unit mod " + std::to_string(m));
}

std::shared_ptr<const EmbeddingSet> CMFieldSpec::embeddings(mpfr_prec_t precision_bits) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache_ && cache_->precision_bits >= precision_bits) return cache_;
  cache_ = std::make_shared<const EmbeddingSet>(complex_embeddings(field, std::max<mpfr_prec_t>(precision_bits, 128)));
  return cache_;
}

namespace {

void check_totally_complex(const CMFieldSpec& spec) {
  auto emb = spec.embeddings();
  for (std::size_t i = 0; i < emb->size(); ++i) {
    if (abs(emb->center[i].im) <= emb->radius[i]) {
      throw PreconditionError("CM field " + spec.description() + " has a real embedding");
    }
  }
  for (std::size_t i = 0; i < emb->size(); i += 2) {
    if (emb->conjugate_index(i) != i + 1 || emb->center[i].im.sign() <= 0) {
      throw PreconditionError("CM field " + spec.description() + ": embeddings do not pair up");
    }
  }
}

std::vector<std::size_t> embeddings_of_automorphisms(const CMFieldSpec& spec) {
  auto emb = spec.embeddings();
  std::vector<std::size_t> out;
  const MpComplex& base = emb->center[spec.base_index];
  for (const auto& image : spec.automorphisms) out.push_back(emb->nearest(image.evaluate(base)));
  std::set<std::size_t> distinct(out.begin(), out.end());
  if (distinct.size() != out.size()) throw PreconditionError("automorphism images are not distinct embeddings");
  return out;
}

std::uint64_t unit_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
    if (k > m) return 0;
  }
  return k;
}

Integer isqrt_exact(const Integer& n) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

}  // namespace

SpecPtr make_cyclotomic_cm(std::uint64_t m) {
  if (m < 3) throw PreconditionError("make_cyclotomic_cm: need m >= 3");
  const std::uint64_t phi = euler_phi(m);
  std::uint64_t gen = 0;
  for (std::uint64_t a = 2; a < m && gen == 0; ++a) {
    if (std::gcd(a, m) == 1 && unit_order(a, m) == phi) gen = a;
  }
  if (phi == 2) gen = m - 1;
  if (gen == 0) {
    throw PreconditionError("make_cyclotomic_cm: (Z/" + std::to_string(m) + "Z)^* is not cyclic");
  }
  auto spec = std::make_shared<CMFieldSpec>();
  spec->field = NumberField::create(cyclotomic_polynomial(m));
  spec->g = static_cast<int>(phi / 2);
  spec->kind = FamilyKind::Cyclotomic;
  spec->m = m;
  spec->generator = gen;
  spec->conjugation = FieldElement::theta(spec->field, static_cast<unsigned>(m - 1));
  spec->real_subfield_gen = FieldElement::theta(spec->field) + spec->conjugation;
  check_totally_complex(*spec);

  auto emb = spec->embeddings();
  const mpfr_prec_t prec = emb->precision_bits;
  spec->exponent_of_index.assign(phi, 0);
  const MpReal two_pi_over_m = MpReal::pi(prec) * MpReal(2.0, prec) / MpReal(Integer(static_cast<unsigned long>(m)), prec);
  for (std::uint64_t n = 1; n < m; ++n) {
    if (std::gcd(n, m) != 1) continue;
    MpReal angle = two_pi_over_m * MpReal(Integer(static_cast<unsigned long>(n)), prec);
    spec->exponent_of_index[emb->nearest(MpComplex(cos(angle), sin(angle)))] = n;
  }
  spec->base_index = spec->index_of_exponent(1);
  std::uint64_t power = 1;
  for (std::uint64_t j = 0; j < phi; ++j) {
    spec->automorphisms.push_back(FieldElement::theta(spec->field, static_cast<unsigned>(power)));
    spec->aut_embedding.push_back(spec->index_of_exponent(power));
    power = power * gen % m;
  }
  return spec;
}

SpecPtr make_quartic_cm(const Integer& a, const Integer& b, const Integer& d) {
  if (d <= 1) throw PreconditionError("make_quartic_cm: d must be a squarefree integer > 1");
  for (const auto& pp : factorize(d)) {
    if (pp.exponent > 1) throw PreconditionError("make_quartic_cm: d must be squarefree");
  }
  if (b == 0) throw PreconditionError("make_quartic_cm: b = 0 gives a degenerate field");
  const Integer c = a * a - b * b * d;
  if (a <= 0 || c <= 0) {
    throw PreconditionError("make_quartic_cm: -a +/- b sqrt(d) must both be negative (totally imaginary field)");
  }
  if (is_perfect_square(c)) throw PreconditionError("make_quartic_cm: field is biquadratic");

  auto spec = std::make_shared<CMFieldSpec>();
  spec->field = NumberField::create(IntPolynomial{c, Integer(0), Integer(2 * a), Integer(0), Integer(1)});
  spec->g = 2;
  spec->a = a;
  spec->b = b;
  spec->d = d;
  spec->kind = is_perfect_square(c * d) ? FamilyKind::QuarticCyclic : FamilyKind::QuarticNonGalois;
  const FieldElement theta = FieldElement::theta(spec->field);
  spec->conjugation = -theta;
  spec->real_subfield_gen = theta * theta;
  check_totally_complex(*spec);

  if (spec->kind == FamilyKind::QuarticCyclic) {
    // sigma(theta) = s sqrt(d) / theta with s^2 = c/d, sqrt(d) = (theta^2 + a)/b
    // and 1/theta = -(theta^3 + 2a theta)/c.
    const Integer s = isqrt_exact(c / d);
    const FieldElement one = FieldElement::from_integer(spec->field, 1);
    FieldElement inv_theta = (theta.pow(3) + theta.scaled(Rational(2 * a))).scaled(Rational(-1) / Rational(c));
    FieldElement sqrt_d = (theta * theta + one.scaled(Rational(a))).scaled(Rational(1) / Rational(b));
    FieldElement sigma = (sqrt_d * inv_theta).scaled(Rational(s));
    if (sigma.substitute(sigma) != spec->conjugation) {
      throw PreconditionError("make_quartic_cm: failed to construct a generator of the Galois group");
    }
    FieldElement cur = theta;
    for (int j = 0; j < 4; ++j) {
      spec->automorphisms.push_back(cur);
      cur = cur.substitute(sigma);
    }
    spec->base_index = 0;
    spec->aut_embedding = embeddings_of_automorphisms(*spec);
  }
  return spec;
}

SpecPtr parse_field_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("field spec must be cyclotomic:<m> or quartic:<a>,<b>,<d>");
  const std::string family = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  try {
    if (family == "cyclotomic") {
      std::size_t pos = 0;
      unsigned long long m = std::stoull(args, &pos);
      if (pos != args.size()) throw std::invalid_argument("bad cyclotomic conductor: " + args);
      return make_cyclotomic_cm(m);
    }
    if (family == "quartic") {
      std::vector<Integer> vals;
      std::stringstream ss(args);
      std::string item;
      while (std::getline(ss, item, ',')) vals.emplace_back(item);
      if (vals.size() != 3) throw std::invalid_argument("quartic spec needs three integers a,b,d");
      return make_quartic_cm(vals[0], vals[1], vals[2]);
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("malformed field spec: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed field spec: " + text);
  }
  throw std::invalid_argument("unknown field family: " + family);
}

// ---------------------------------------------------------------------------
// CM types

namespace {

std::uint32_t mask_of_indices(const CMFieldSpec& spec, const std::vector<std::size_t>& idx) {
  std::uint32_t mask = 0;
  std::vector<int> seen(spec.g, 0);
  for (std::size_t i : idx) {
    if (i >= static_cast<std::size_t>(spec.degree())) throw PreconditionError("embedding index out of range");
    ++seen[i / 2];
    if (i % 2) mask |= std::uint32_t{1} << (i / 2);
  }
  for (int c : seen) {
    if (c != 1) throw PreconditionError("a CM-type must pick exactly one embedding from each conjugate pair");
  }
  return mask;
}

std::vector<std::size_t> indices_of_mask(int g, std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (int i = 0; i < g; ++i) out.push_back(2 * i + ((mask >> i) & 1));
  return out;
}

std::vector<std::size_t> exponents_of_mask(const CMFieldSpec& spec, std::uint32_t mask) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> idx = indices_of_mask(spec.g, mask);
  for (std::size_t j = 0; j < spec.aut_embedding.size(); ++j) {
    if (std::find(idx.begin(), idx.end(), spec.aut_embedding[j]) != idx.end()) out.push_back(j);
  }
  return out;
}

std::uint32_t mask_of_exponents(const CMFieldSpec& spec, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> idx;
  for (std::size_t j : s) idx.push_back(spec.aut_embedding[j % spec.aut_embedding.size()]);
  return mask_of_indices(spec, idx);
}

std::vector<std::uint32_t> orbit(const CMFieldSpec& spec, std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  if (!spec.is_galois()) {
    const std::uint32_t full = (std::uint32_t{1} << spec.g) - 1;
    return {mask, full & ~mask};
  }
  const std::size_t n = spec.aut_embedding.size();
  const std::vector<std::size_t> s = exponents_of_mask(spec, mask);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::size_t> shifted;
    for (std::size_t j : s) shifted.push_back((j + t) % n);
    out.push_back(mask_of_exponents(spec, shifted));
  }
  return out;
}

std::uint32_t orbit_min(const CMFieldSpec& spec, std::uint32_t mask) {
  auto o = orbit(spec, mask);
  return *std::min_element(o.begin(), o.end());
}

bool primitive_mask(const CMFieldSpec& spec, std::uint32_t mask) {
  if (!spec.is_galois()) return true;
  const std::size_t n = spec.aut_embedding.size();
  std::vector<std::size_t> s = exponents_of_mask(spec, mask);
  std::sort(s.begin(), s.end());
  for (std::size_t h = 1; h < n; ++h) {
    std::vector<std::size_t> shifted;
    for (std::size_t j : s) shifted.push_back((j + h) % n);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == s) return false;
  }
  return true;
}

constexpr int kMaxEnumerationGenus = 12;

}  // namespace

CMType cm_type_from_mask(const SpecPtr& spec, std::uint32_t mask) {
  if (spec->g > 31 || mask >= (std::uint32_t{1} << spec->g)) throw PreconditionError("CM-type mask out of range");
  CMType t;
  t.spec = spec;
  t.mask = mask;
  t.selected = indices_of_mask(spec->g, mask);
  t.primitive = primitive_mask(*spec, mask);
  t.equivalence_class = -1;
  if (spec->g <= kMaxEnumerationGenus) {
    const std::uint32_t mine = orbit_min(*spec, mask);
    std::set<std::uint32_t> smaller;
    for (std::uint32_t other = 0; other < mine; ++other) {
      std::uint32_t om = orbit_min(*spec, other);
      if (om < mine) smaller.insert(om);
    }
    t.equivalence_class = static_cast<int>(smaller.size());
  }
  return t;
}

CMType cm_type_from_indices(const SpecPtr& spec, const std::vector<std::size_t>& indices) {
  return cm_type_from_mask(spec, mask_of_indices(*spec, indices));
}

CMType cm_type_from_exponents(const SpecPtr& spec, const std::vector<std::uint64_t>& exponents) {
  if (spec->kind != FamilyKind::Cyclotomic) throw PreconditionError("exponent labels apply to cyclotomic fields only");
  std::vector<std::size_t> idx;
  for (auto n : exponents) idx.push_back(spec->index_of_exponent(n));
  return cm_type_from_indices(spec, idx);
}

std::vector<CMType> enumerate_cm_types(const SpecPtr& spec) {
  if (spec->g > kMaxEnumerationGenus) throw PreconditionError("enumerate_cm_types: genus too large to enumerate");
  std::vector<CMType> out;
  std::map<std::uint32_t, int> class_of_min;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << spec->g); ++mask) {
    CMType t;
    t.spec = spec;
    t.mask = mask;
    t.selected = indices_of_mask(spec->g, mask);
    t.primitive = primitive_mask(*spec, mask);
    const std::uint32_t om = orbit_min(*spec, mask);
    auto it = class_of_min.find(om);
    if (it == class_of_min.end()) it = class_of_min.emplace(om, static_cast<int>(class_of_min.size())).first;
    t.equivalence_class = it->second;
    out.push_back(std::move(t));
  }
  return out;
}

CMType auto_cm_type(const SpecPtr& spec) {
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << spec->g); ++mask) {
    if (primitive_mask(*spec, mask)) return cm_type_from_mask(spec, mask);
  }
  throw PreconditionError("field " + spec->description() + " has no primitive CM-type");
}

bool is_primitive(const CMType& t) { return primitive_mask(*t.spec, t.mask); }

std::vector<std::size_t> galois_exponents(const CMType& t) {
  if (!t.spec->is_galois()) throw PreconditionError("galois_exponents: field is not Galois");
  return exponents_of_mask(*t.spec, t.mask);
}

std::vector<std::uint64_t> cm_type_labels(const CMType& t) {
  std::vector<std::uint64_t> out;
  for (std::size_t i : t.selected) {
    out.push_back(t.spec->kind == FamilyKind::Cyclotomic ? t.spec->exponent_of_index[i] : i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Reflex

ReflexData reflex(const CMType& t) {
  if (!is_primitive(t)) throw PreconditionError("reflex: CM-type is not primitive");
  const CMFieldSpec& spec = *t.spec;
  ReflexData out;
  out.type = t;
  out.g = spec.g;
  out.complex_corr.assign(spec.degree(), {});

  if (spec.is_galois()) {
    const std::size_t n = spec.aut_embedding.size();
    const std::vector<std::size_t> s = galois_exponents(t);
    out.reflex_spec = t.spec;
    out.ghat = spec.g;
    std::vector<std::size_t> psi_idx;
    for (std::size_t j : s) {
      out.psi_automorphisms.push_back((n - j) % n);
      psi_idx.push_back(spec.aut_embedding[(n - j) % n]);
    }
    out.reflex_type = cm_type_from_indices(t.spec, psi_idx);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t sj : s) out.complex_corr[spec.aut_embedding[j]].push_back(spec.aut_embedding[(j + n - sj) % n]);
    }
    return out;
  }

  // Non-Galois quartic: c = s^2 d0 with d0 squarefree; the reflex is
  // Q(sqrt(-2a + 2s sqrt(d0))), rescaled by the largest u with u^2 | 2a, 2s.
  const Integer c = spec.a * spec.a - spec.b * spec.b * spec.d;
  Integer d0 = 1, s = 1;
  for (const auto& pp : factorize(c)) {
    Integer p = pp.prime;
    for (unsigned i = 0; i < pp.exponent / 2; ++i) s *= p;
    if (pp.exponent % 2) d0 *= p;
  }
  Integer g2;
  const Integer two_a = 2 * spec.a, two_s = 2 * s;
  mpz_gcd(g2.get_mpz_t(), two_a.get_mpz_t(), two_s.get_mpz_t());
  Integer u = 1;
  for (const auto& pp : factorize(g2)) {
    for (unsigned i = 0; i < pp.exponent / 2; ++i) u *= pp.prime;
  }
  const Integer ah = two_a / (u * u), bh = two_s / (u * u);
  out.reflex_spec = make_quartic_cm(ah, bh, d0);
  if (out.reflex_spec->kind != FamilyKind::QuarticNonGalois) {
    throw PreconditionError("reflex: unexpected Galois reflex for a non-Galois quartic field");
  }
  out.ghat = 2;
  out.scale = u;

  auto emb = spec.embeddings(256);
  auto emb_h = out.reflex_spec->embeddings(256);
  const mpfr_prec_t prec = emb->precision_bits;
  const MpReal inv_u = MpReal(1.0, prec) / MpReal(u, prec);
  const MpReal tol = MpReal::pow2(-64, prec);
  for (std::size_t e = 0; e < 4; ++e) {
    const MpComplex& x = emb->center[e];
    const MpComplex& y = emb->center[2 * (1 - e / 2)];
    for (const MpComplex& w : {x + y, x - y}) {
      MpComplex z(w.re * inv_u, w.im * inv_u);
      std::size_t h = emb_h->nearest(z);
      if ((emb_h->center[h] - z).abs() > tol) {
        throw PrecisionError("reflex: failed to match reflex embeddings");
      }
      out.complex_corr[e].push_back(h);
    }
  }
  out.reflex_type = cm_type_from_indices(out.reflex_spec, out.complex_corr[t.selected[0]]);
  return out;
}

std::vector<Residue> ReflexData::residue_labels(const Residue& t0, const std::vector<Residue>& k_roots) const {
  std::vector<Residue> out;
  const CMFieldSpec& spec = *type.spec;
  if (spec.is_galois()) {
    for (std::size_t j : psi_automorphisms) out.push_back(reduce_mod_root(spec.automorphisms[j], t0));
    return out;
  }
  const Integer& r = t0.modulus();
  const Residue neg_t0 = Residue(-t0.value(), r);
  for (const auto& y : k_roots) {
    if (y == t0 || y == neg_t0) continue;
    const Residue inv_u = Residue(scale, r).inverse();
    out.push_back((t0 + y) * inv_u);
    out.push_back((t0 - y) * inv_u);
    return out;
  }
  throw NotSplitError("residue_labels: r does not split completely in K");
}

// ---------------------------------------------------------------------------
// Type norms

FieldElement type_norm_galois(const ReflexData& reflex, const FieldElement& xi) {
  const CMFieldSpec& spec = *reflex.reflex_spec;
  if (!spec.is_galois()) throw PreconditionError("type_norm_galois: field is not Galois");
  require_same_field(xi, FieldElement::from_integer(spec.field, 0));
  FieldElement out = FieldElement::from_integer(reflex.type.spec->field, 1);
  for (std::size_t j : reflex.psi_automorphisms) out = out * spec.apply_automorphism(xi, j);
  return out;
}

FieldElement type_norm_phi(const CMType& t, const FieldElement& x) {
  FieldElement out = FieldElement::from_integer(t.spec->field, 1);
  for (std::size_t j : galois_exponents(t)) out = out * t.spec->apply_automorphism(x, j);
  return out;
}

namespace {

// Solves V c = w where V[e][i] = x_e^i, by Gaussian elimination with partial
// pivoting.
std::vector<MpComplex> solve_vandermonde(const std::vector<MpComplex>& x, std::vector<MpComplex> w) {
  const std::size_t n = x.size();
  const mpfr_prec_t prec = x[0].prec();
  std::vector<std::vector<MpComplex>> a(n, std::vector<MpComplex>(n, MpComplex(prec)));
  for (std::size_t e = 0; e < n; ++e) {
    MpComplex p(Integer(1), prec);
    for (std::size_t i = 0; i < n; ++i) {
      a[e][i] = p;
      p = p * x[e];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].norm() > a[piv][k].norm()) piv = i;
    }
    std::swap(a[k], a[piv]);
    std::swap(w[k], w[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      MpComplex f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
      w[i] = w[i] - f * w[k];
    }
  }
  std::vector<MpComplex> c(n, MpComplex(prec));
  for (std::size_t k = n; k-- > 0;) {
    MpComplex acc = w[k];
    for (std::size_t j = k + 1; j < n; ++j) acc = acc - a[k][j] * c[j];
    c[k] = acc / a[k][k];
  }
  return c;
}

double log2_max_root(const EmbeddingSet& emb) {
  double m = 1;
  for (const auto& z : emb.center) m = std::max(m, z.abs().to_double());
  return std::log2(m);
}

}  // namespace

FieldElement type_norm_numeric(const ReflexData& reflex, const FieldElement& xi, int max_retries) {
  const CMFieldSpec& k_spec = *reflex.type.spec;
  const CMFieldSpec& h_spec = *reflex.reflex_spec;
  require_same_field(xi, FieldElement::from_integer(h_spec.field, 0));
  if (!xi.is_integral()) throw NonIntegralError("type_norm: xi must be integral");
  const int n = k_spec.degree();
  const int nh = h_spec.degree();

  std::size_t coord_bits = 1;
  for (const auto& c : xi.numerators()) coord_bits = std::max(coord_bits, bit_length(c));
  const Integer disc = abs(k_spec.field->disc_defining_poly());
  const double log_rh = log2_max_root(*h_spec.embeddings());
  const double log_r = log2_max_root(*k_spec.embeddings());
  mpfr_prec_t prec = 128 + static_cast<mpfr_prec_t>(reflex.ghat * (coord_bits + nh * (log_rh + 1) + 4) +
                                                   2 * bit_length(disc) + 4 * n * (log_r + 1));
  std::vector<Rational> q_coords(n, Rational(0));
  q_coords[0] = norm(xi);
  const FieldElement q_elem = FieldElement::from_rationals(k_spec.field, q_coords);

  for (int attempt = 0; attempt <= max_retries; ++attempt, prec *= 2) {
    auto emb = k_spec.embeddings(prec);
    auto emb_h = h_spec.embeddings(prec);
    std::vector<MpComplex> xi_vals;
    for (int i = 0; i < nh; ++i) xi_vals.push_back(xi.evaluate(emb_h->center[i]));
    std::vector<MpComplex> w;
    for (int e = 0; e < n; ++e) {
      MpComplex v(Integer(1), prec);
      for (std::size_t h : reflex.complex_corr[e]) v = v * xi_vals[h];
      w.push_back(std::move(v));
    }
    std::vector<MpComplex> c = solve_vandermonde(emb->center, std::move(w));
    std::vector<Integer> num;
    const MpReal scale(disc, prec);
    for (const auto& ci : c) num.push_back((ci.re * scale).round());
    FieldElement pi(k_spec.field, std::move(num), disc);
    if (pi * k_spec.conj(pi) != q_elem) continue;
    if (!is_algebraic_integer(pi)) continue;
    return pi;
  }
  throw PrecisionError("type_norm: numeric reconstruction failed after precision retries");
}

FieldElement type_norm(const ReflexData& reflex, const FieldElement& xi) {
  if (reflex.reflex_spec->is_galois()) return type_norm_galois(reflex, xi);
  return type_norm_numeric(reflex, xi);
}

}  // namespace cmweil
