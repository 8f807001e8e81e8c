#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "cmweil/error.hpp"
#include "cmweil/weilgen.hpp"

namespace cmweil {

namespace {

using i128 = __int128;

// Fixed data for evaluating candidates with machine integers.
struct FastContext {
  int n = 0;
  std::int64_t r = 0;
  std::vector<std::int64_t> f;                    // defining polynomial, low first
  std::vector<std::vector<std::int64_t>> crt;     // crt_basis
  bool fast_norm = false;                         // Bareiss fits in 128 bits
};

// Norm of the element with the given coordinates: determinant of the
// multiplication matrix by Bareiss elimination in 128-bit integers.
i128 norm_bareiss(const FastContext& ctx, const std::vector<std::int64_t>& x) {
  const int n = ctx.n;
  i128 m[16][16];
  std::vector<i128> col(x.begin(), x.end());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
    // col <- theta * col
    const i128 top = col[n - 1];
    for (int i = n - 1; i > 0; --i) col[i] = col[i - 1] - top * ctx.f[i];
    col[0] = -top * ctx.f[0];
  }
  int sign = 1;
  i128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k][j], m[p][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Integer out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += Integer(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  return neg ? Integer(-out) : out;
}

// log2 of the Hadamard bound for multiplication matrices of elements with
// coordinates bounded by r/2. Bareiss multiplies two minors, so the square
// of the bound must stay below 2^126.
double log2_hadamard(const CMFieldSpec& spec, const Integer& r) {
  const int n = spec.degree();
  const auto& table = spec.field->reduction_table();
  // Entry (i, j) is sum_k x_k [theta^(k+j)]_i; bound by (r/2) sum_k |[theta^(k+j)]_i|.
  double total = 0;
  const double half_r = r.get_d() / 2;
  for (int j = 0; j < n; ++j) {
    double col = 0;
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int k = 0; k < n; ++k) {
        const int e = k + j;
        if (e < n) {
          s += (e == i) ? 1 : 0;
        } else {
          s += std::abs(table[e - n][i].get_d());
        }
      }
      col += (half_r * s) * (half_r * s);
    }
    total += 0.5 * std::log2(col);
  }
  return total;
}

// True iff pi generates the field. For Galois families pi generates K iff no
// power sigma^(n/p), p prime, fixes it.
bool generates(const CMFieldSpec& spec, const FieldElement& pi) {
  if (!spec.is_galois()) return minimal_polynomial(pi).degree() == spec.degree();
  const std::uint64_t n = spec.automorphisms.size();
  for (std::uint64_t p : prime_divisors(n)) {
    if (spec.apply_automorphism(pi, n / p) == pi) return false;
  }
  return true;
}

struct Partial {
  std::uint64_t candidates = 0;
  std::uint64_t prime_count = 0;
  std::uint64_t step8_failures = 0;
  std::map<long, std::uint64_t> histogram;
  std::optional<SearchWinner> winner;
  std::uint64_t winner_index = 0;
};

}  // namespace

SearchReport exhaustive_search(const CMType& type, std::uint64_t k, const Integer& r, const SearchOptions& options) {
  const CMFieldSpec& spec = *type.spec;
  if (k == 0 || (r - 1) % Integer(static_cast<unsigned long>(k)) != 0) {
    throw PreconditionError("exhaustive_search: k must divide r - 1");
  }
  if (spec.degree() < 4) throw PreconditionError("exhaustive_search: needs 2g >= 4");
  const ReflexData rx = reflex(type);
  const SplitData split = split_completely(rx, r, options.base_root);
  const CMFieldSpec& h_spec = *rx.reflex_spec;
  const int ghat = rx.ghat;
  const int n = h_spec.degree();
  if (r >= (Integer(1) << 31) || n > 16) {
    throw BudgetExceeded("exhaustive_search: r or the field degree is too large to enumerate");
  }

  std::vector<Residue> zetas = all_primitive_kth_roots(r, k);
  if (!options.all_zetas) zetas.erase(zetas.begin() + 1, zetas.end());

  const std::uint64_t rr = r.get_ui();
  const int free_vars = 2 * (ghat - 1);
  long double domain = std::pow(static_cast<long double>(rr - 1), free_vars) * zetas.size();
  if (domain > static_cast<long double>(options.budget)) {
    throw BudgetExceeded("exhaustive_search: " + std::to_string(static_cast<double>(domain)) +
                         " candidates exceed the budget of " + std::to_string(options.budget));
  }
  const std::uint64_t per_zeta = static_cast<std::uint64_t>(std::pow(static_cast<long double>(rr - 1), free_vars));
  const std::uint64_t total = per_zeta * zetas.size();

  FastContext ctx;
  ctx.n = n;
  ctx.r = static_cast<std::int64_t>(rr);
  for (int i = 0; i <= n; ++i) ctx.f.push_back(h_spec.field->defining_poly()[i].get_si());
  for (const auto& row : split.crt_basis) {
    std::vector<std::int64_t> out;
    for (const auto& c : row) out.push_back(c.get_si());
    ctx.crt.push_back(std::move(out));
  }
  ctx.fast_norm = log2_hadamard(h_spec, r) < 62;

  std::vector<std::uint64_t> inverse(rr, 0);
  for (std::uint64_t a = 1; a < rr; ++a) {
    if (inverse[a] == 0) {
      std::uint64_t b = invmod(Integer(static_cast<unsigned long>(a)), r).get_ui();
      inverse[a] = b;
      inverse[b] = a;
    }
  }

  const Integer& disc = spec.field->disc_defining_poly();
  const double log_r = log_integer(r);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
    std::vector<std::uint64_t> vals(n);
    std::vector<std::int64_t> coords(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ++part.candidates;
      const std::uint64_t zi = idx / per_zeta;
      std::uint64_t rest = idx % per_zeta;
      const std::uint64_t zeta = zetas[zi].value().get_ui();
      std::uint64_t pa = 1, pb = 1;
      for (int i = 0; i + 1 < ghat; ++i) {
        const std::uint64_t a = rest % (rr - 1) + 1;
        rest /= rr - 1;
        const std::uint64_t b = rest % (rr - 1) + 1;
        rest /= rr - 1;
        vals[2 * i] = a;
        vals[2 * i + 1] = b;
        pa = pa * a % rr;
        pb = pb * b % rr;
      }
      vals[2 * (ghat - 1)] = inverse[pa];
      vals[2 * (ghat - 1) + 1] = zeta * inverse[pb] % rr;
      for (int i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < n; ++j) acc = (acc + static_cast<std::uint64_t>(ctx.crt[i][j]) * vals[j]) % rr;
        std::int64_t c = static_cast<std::int64_t>(acc);
        if (2 * c > ctx.r) c -= ctx.r;
        coords[i] = c;
      }
      Integer q;
      if (ctx.fast_norm) {
        q = to_integer(norm_bareiss(ctx, coords));
      } else {
        std::vector<Integer> big(coords.begin(), coords.end());
        q = norm(FieldElement(h_spec.field, std::move(big))).get_num();
      }
      if (!is_prime(q)) continue;
      ++part.prime_count;
      const double rh = spec.g * log_integer(q) / log_r;
      ++part.histogram[static_cast<long>(std::floor(rh / SearchReport::kBinWidth))];

      std::vector<Integer> big(coords.begin(), coords.end());
      FieldElement xi(h_spec.field, std::move(big));
      if (disc % q == 0) {
        ++part.step8_failures;
        continue;
      }
      FieldElement pi = type_norm(rx, xi);
      if (!generates(spec, pi)) {
        ++part.step8_failures;
        continue;
      }
      if (!part.winner || q < part.winner->q) {
        SearchWinner w;
        w.q = q;
        w.xi = xi;
        w.pi = pi;
        w.rho = rh;
        w.assignment.zeta = zetas[zi];
        for (int i = 0; i < ghat; ++i) {
          w.assignment.alphas.emplace_back(Integer(static_cast<unsigned long>(vals[2 * i])), r);
          w.assignment.betas.emplace_back(Integer(static_cast<unsigned long>(vals[2 * i + 1])), r);
        }
        part.winner = std::move(w);
        part.winner_index = idx;
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  std::vector<Partial> parts(threads);
  if (threads == 1) {
    run_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex mu;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = total * t / threads, e = total * (t + 1) / threads;
      pool.emplace_back([&, b, e, t] {
        try {
          run_range(b, e, parts[t]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SearchReport report;
  std::uint64_t best_index = 0;
  for (auto& part : parts) {
    report.candidates += part.candidates;
    report.prime_count += part.prime_count;
    report.step8_failures += part.step8_failures;
    for (const auto& [bin, count] : part.histogram) report.rho_histogram[bin] += count;
    if (part.winner &&
        (!report.winner || part.winner->q < report.winner->q ||
         (part.winner->q == report.winner->q && part.winner_index < best_index))) {
      report.winner = part.winner;
      best_index = part.winner_index;
    }
  }
  if (report.winner) report.winner->group_order = group_order(report.winner->pi);
  return report;
}

}  // namespace cmweil
