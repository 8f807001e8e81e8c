#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "cmweil/error.hpp"
#include "cmweil/numfield.hpp"

namespace cmweil {

namespace {

using cd = std::complex<double>;

// Simultaneous Aberth-Ehrlich iteration in double precision.
std::vector<cd> aberth(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[i].get_d();
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  bound = 1 + bound;
  // Start on a circle of radius comparable to the root moduli.
  double radius = std::pow(std::abs(c[0]) > 0 ? std::abs(c[0]) : 1.0, 1.0 / n);
  radius = std::min(std::max(radius, 0.5), bound);
  std::vector<cd> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(radius, 2 * M_PI * i / n + 0.4);
  auto eval = [&](cd x, cd& fx, cd& dfx) {
    fx = c[n];
    dfx = 0;
    for (int i = n - 1; i >= 0; --i) {
      dfx = dfx * x + fx;
      fx = fx * x + c[i];
    }
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double max_step = 0;
    for (int i = 0; i < n; ++i) {
      cd fx, dfx;
      eval(z[i], fx, dfx);
      if (fx == 0.0) continue;
      cd ratio = fx / dfx;
      cd sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      cd step = ratio / (1.0 - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (max_step < 1e-15) break;
  }
  return z;
}

MpReal cabs_upper(const MpComplex& z) { return z.abs(); }

// Sum of |c_i| * x^i, used for a rounding-error allowance.
MpReal abs_poly_at(const IntPolynomial& f, const MpReal& x) {
  MpReal acc(x.prec());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + MpReal(Integer(abs(f[i])), x.prec());
  return acc;
}

}  // namespace

EmbeddingSet complex_embeddings(const FieldPtr& field, mpfr_prec_t precision_bits) {
  if (precision_bits < 64) throw PreconditionError("complex_embeddings: precision must be at least 64 bits");
  const IntPolynomial& f = field->defining_poly();
  const IntPolynomial df = f.derivative();
  const int n = f.degree();
  const mpfr_prec_t work = precision_bits + 32;

  std::vector<cd> approx = aberth(f);

  EmbeddingSet out;
  out.field = field;
  out.precision_bits = precision_bits;
  const MpReal target = MpReal::pow2(-static_cast<long>(precision_bits) - 8, work);
  for (int i = 0; i < n; ++i) {
    MpComplex z(MpReal(approx[i].real(), work), MpReal(approx[i].imag(), work));
    for (int iter = 0; iter < 200; ++iter) {
      MpComplex fz = evaluate(f, z);
      MpComplex dfz = evaluate(df, z);
      if (dfz.norm().is_zero()) break;
      MpComplex step = fz / dfz;
      z = z - step;
      MpReal scale = MpReal(1.0, work) + cabs_upper(z);
      if (step.abs() <= target * scale) break;
    }
    out.center.push_back(std::move(z));
  }

  // Inclusion radius n |f(z)| / |f'(z)| plus an allowance for rounding in
  // the evaluation of f at working precision.
  for (int i = 0; i < n; ++i) {
    const MpComplex& z = out.center[i];
    MpComplex fz = evaluate(f, z);
    MpComplex dfz = evaluate(df, z);
    MpReal dabs = dfz.abs();
    MpReal slack = abs_poly_at(f, cabs_upper(z) + MpReal(1.0, work)) * MpReal::pow2(-(work - 16), work);
    if (dabs.is_zero() || dabs <= slack) throw PrecisionError("complex_embeddings: derivative vanishes at approximation");
    MpReal rad = MpReal(Integer(n), work) * (fz.abs() + slack) / (dabs - slack);
    out.radius.push_back(rad + MpReal::pow2(-(work - 4), work));
  }

  // Canonical order.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    re[i] = out.center[i].re.to_double();
    im[i] = out.center[i].im.to_double();
  }
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * (1 + std::abs(a) + std::abs(b)); };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (!close(re[a], re[b])) return re[a] < re[b];
    if (!close(std::abs(im[a]), std::abs(im[b]))) return std::abs(im[a]) < std::abs(im[b]);
    return im[a] > im[b];
  });
  EmbeddingSet sorted;
  sorted.field = field;
  sorted.precision_bits = precision_bits;
  for (int i : perm) {
    sorted.center.push_back(out.center[i]);
    sorted.radius.push_back(out.radius[i]);
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MpReal dist = (sorted.center[i] - sorted.center[j]).abs();
      if (dist <= sorted.radius[i] + sorted.radius[j]) {
        throw PrecisionError("complex_embeddings: root enclosures overlap");
      }
    }
  }
  return sorted;
}

std::size_t EmbeddingSet::nearest(const MpComplex& z) const {
  std::size_t best = 0;
  MpReal best_d = (center[0] - z).norm();
  for (std::size_t i = 1; i < center.size(); ++i) {
    MpReal d = (center[i] - z).norm();
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::size_t EmbeddingSet::conjugate_index(std::size_t i) const { return nearest(center[i].conj()); }

}  // namespace cmweil
