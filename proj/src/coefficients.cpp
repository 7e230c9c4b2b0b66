#include <linz/coefficients.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linz {

namespace {

const Rational kHalf(1, 2);

APoly apoly_a() { return APoly::variable(); }                  // a
APoly apoly_one_minus_a() { return APoly({1, -1}); }           // 1 - a
APoly apoly_a_one_minus_a() { return APoly({0, 1, -1}); }      // a(1-a)
APoly apoly_two_a_minus_one_sq() { return APoly({1, -4, 4}); } // (2a-1)^2

/// Back-substitution against the q basis for a polynomial in u whose
/// coefficients are themselves polynomials in a. ucoeffs[t] is the
/// coefficient of u^t; returns q-basis coefficients indexed by degree.
std::vector<APoly> bessel_solve_sym(std::vector<APoly> ucoeffs) {
  int d = static_cast<int>(ucoeffs.size()) - 1;
  while (d >= 0 && ucoeffs[d].is_zero()) --d;
  std::vector<APoly> out(std::max(d + 1, 0));
  for (int k = d; k >= 0; --k) {
    APoly lead = ucoeffs[k] * (Rational(1) / alpha_coeff(k, k));
    out[k] = lead;
    if (lead.is_zero()) continue;
    UPoly qk = q_poly(k);
    for (int j = 0; j <= k; ++j) ucoeffs[j] -= lead * qk.coeff(j);
  }
  return out;
}

/// Coefficients (in u) of q_n(au) q_m((1-a)u), as polynomials in a.
std::vector<APoly> product_ucoeffs_sym(unsigned n, unsigned m) {
  // a^p and (1-a)^q power tables
  std::vector<APoly> ap(n + 1), omp(m + 1);
  ap[0] = APoly::constant(1);
  for (unsigned p = 1; p <= n; ++p) ap[p] = ap[p - 1] * apoly_a();
  omp[0] = APoly::constant(1);
  for (unsigned q = 1; q <= m; ++q) omp[q] = omp[q - 1] * apoly_one_minus_a();

  std::vector<APoly> ucoeffs(n + m + 1);
  for (unsigned p = 0; p <= n; ++p) {
    Rational an = alpha_coeff(n, p);
    for (unsigned q = 0; q <= m; ++q)
      ucoeffs[p + q] += (ap[p] * omp[q]) * (an * alpha_coeff(m, q));
  }
  return ucoeffs;
}

CoeffTable make_table(TableKind kind, std::vector<unsigned> degrees, std::vector<APoly> entries) {
  CoeffTable t;
  t.kind = kind;
  t.degrees = std::move(degrees);
  t.symbolic = true;
  t.entries = std::move(entries);
  return t;
}

}  // namespace

APoly CoeffTable::entry_sum() const {
  APoly s;
  for (const auto& e : entries) s += e;
  return s;
}

unsigned CoeffTable::support_min() const {
  for (size_t k = 0; k < entries.size(); ++k)
    if (!entries[k].is_zero()) return static_cast<unsigned>(k);
  return static_cast<unsigned>(entries.size());
}

CoeffTable CoeffTable::evaluated_at(const Rational& a) const {
  CoeffTable t = *this;
  t.symbolic = false;
  for (auto& e : t.entries) e = APoly::constant(e.eval(a));
  return t;
}

APoly connection_closed(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("connection_closed: k > n");
  if (k == n) return APoly::monomial(n);  // a^n
  APoly sum;
  APoly oma = apoly_one_minus_a();
  APoly oma_pow = oma;  // (1-a)^r, starting at r = 1
  unsigned rmax = std::min(n - k, k + 1);
  for (unsigned r = 1; r <= rmax; ++r) {
    BigInt c = binomial(n + 1, static_cast<long>(k + 1) - static_cast<long>(r)) *
               binomial(n - k - 1, static_cast<long>(r) - 1);
    sum += oma_pow * Rational(c);
    if (r < rmax) oma_pow *= oma;
  }
  Rational pref = Rational(binomial(n, k)) / Rational(binomial(2 * n, 2 * k));
  return APoly::monomial(k, pref) * sum;
}

CoeffTable connection_table(unsigned n) {
  std::vector<APoly> entries(n + 1);
  for (unsigned k = 0; k <= n; ++k) entries[k] = connection_closed(n, k);
  return make_table(TableKind::connection, {n}, std::move(entries));
}

CoeffTable connection_oracle(unsigned n) {
  std::vector<APoly> entries(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // c_k^{(n)}(a) = sum_j a^j alpha_j^{(n)} delta_k^{(j)}; delta_k^{(j)}
    // vanishes for j > 2k+1, so the coefficient list is short.
    std::vector<Rational> cs(n + 1);
    for (unsigned j = k; j <= n && j <= 2 * k + 1; ++j)
      cs[j] = alpha_coeff(n, j) * carlitz_delta(j, k);
    entries[k] = APoly(std::move(cs));
  }
  return make_table(TableKind::connection, {n}, std::move(entries));
}

APoly linearization_equal_closed(unsigned n, unsigned i) {
  if (i > n) throw std::out_of_range("linearization_equal_closed: i > n");
  Rational nf_2nf(factorial(n), factorial(2 * n));
  Rational pref = nf_2nf * nf_2nf / Rational(pow2(2 * n));
  pref *= Rational(factorial(2 * n - 2 * i) * factorial(2 * n + 2 * i),
                   factorial(n - i) * factorial(n + i));

  APoly tam1sq = apoly_two_a_minus_one_sq();
  APoly sum;
  APoly tam1_pow = APoly::constant(1);  // (2a-1)^{2j}
  for (unsigned j = 0; j <= n - i; ++j) {
    Rational c(binomial(2 * n + 1, 2 * j) * binomial(n - j, i));
    sum += tam1_pow * c;
    if (j < n - i) tam1_pow *= tam1sq;
  }
  APoly front = pow_poly(apoly_a_one_minus_a() * Rational(4), i);
  return front * sum * pref;
}

CoeffTable linearization_equal_table(unsigned n) {
  std::vector<APoly> entries(2 * n + 1);
  for (unsigned i = 0; i <= n; ++i) entries[n + i] = linearization_equal_closed(n, i);
  return make_table(TableKind::linearization_equal, {n}, std::move(entries));
}

CoeffTable macdonald_product_expand(unsigned n) {
  std::vector<APoly> entries(2 * n + 1);
  APoly a1a = apoly_a_one_minus_a();
  APoly a1a_pow = APoly::constant(1);
  Rational half_poch_n = pochhammer(kHalf, n);
  for (unsigned k = 0; k <= n; ++k) {
    Rational wt = alpha_coeff(n, k) * pochhammer(kHalf, n - k) / (Rational(pow2(k)) * half_poch_n);
    APoly weighted = a1a_pow * wt;
    for (unsigned i = 0; i <= k; ++i) entries[n + i] += weighted * gamma_coeff(n, k, i);
    if (k < n) a1a_pow *= a1a;
  }
  return make_table(TableKind::linearization_equal, {n}, std::move(entries));
}

CoeffTable linearization_general(unsigned n, unsigned m, LinMode mode) {
  if (mode == LinMode::oracle) {
    auto entries = bessel_solve_sym(product_ucoeffs_sym(n, m));
    entries.resize(n + m + 1);
    return make_table(TableKind::linearization_general, {n, m}, std::move(entries));
  }

  // recursion mode: fill the grid of rows beta^{(i,j)} bottom-up.
  APoly a_sq({0, 0, 1});
  APoly oma_sq({1, -2, 1});
  std::vector<std::vector<std::vector<APoly>>> grid(n + 1);
  for (unsigned i = 0; i <= n; ++i) grid[i].resize(m + 1);

  for (unsigned i = 0; i <= n; ++i) {
    grid[i][0].resize(i + 1);
    for (unsigned k = 0; k <= i; ++k) grid[i][0][k] = connection_closed(i, k);
  }
  for (unsigned j = 1; j <= m; ++j) {
    grid[0][j].resize(j + 1);
    for (unsigned k = 0; k <= j; ++k)
      grid[0][j][k] = connection_closed(j, k).compose_affine(1, -1);  // at 1-a
  }
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= m; ++j) {
      std::vector<APoly> row(i + j + 1);  // row[0] stays zero
      Rational wn(1, 2 * static_cast<long>(i) - 1);
      Rational wm(1, 2 * static_cast<long>(j) - 1);
      for (unsigned k = 0; k + 1 <= i + j; ++k) {
        APoly rhs = a_sq * (grid[i - 1][j][k] * wn) + oma_sq * (grid[i][j - 1][k] * wm);
        row[k + 1] = rhs * Rational(2 * static_cast<long>(k) + 1);
      }
      grid[i][j] = std::move(row);
    }
  }
  return make_table(TableKind::linearization_general, {n, m}, std::move(grid[n][m]));
}

namespace {

void check_product_args(std::span<const unsigned> degrees, std::span<const Rational> weights) {
  if (degrees.empty() || degrees.size() != weights.size())
    throw std::invalid_argument("product_expansion: degrees/weights size mismatch");
  Rational sum(0);
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw std::invalid_argument("product_expansion: weights must be positive");
    sum += w;
  }
  if (sum != Rational(1)) throw std::invalid_argument("product_expansion: weights must sum to 1");
}

CoeffTable make_product_table(std::span<const unsigned> degrees, std::span<const Rational> weights,
                              std::vector<Rational> values) {
  std::vector<APoly> entries;
  entries.reserve(values.size());
  for (auto& v : values) entries.push_back(APoly::constant(v));
  CoeffTable t;
  t.kind = TableKind::product;
  t.degrees.assign(degrees.begin(), degrees.end());
  t.weights.assign(weights.begin(), weights.end());
  t.symbolic = false;
  t.entries = std::move(entries);
  return t;
}

}  // namespace

CoeffTable product_expansion(std::span<const unsigned> degrees, std::span<const Rational> weights) {
  check_product_args(degrees, weights);
  unsigned total = std::accumulate(degrees.begin(), degrees.end(), 0u);

  std::vector<Rational> cur(total + 1);
  cur[degrees[0]] = Rational(1);
  unsigned cur_max = degrees[0];

  // Symbolic two-factor tables are reused across steps and weights.
  std::map<std::pair<unsigned, unsigned>, CoeffTable> cache;
  auto two_factor = [&cache](unsigned d, unsigned j) -> const CoeffTable& {
    auto key = std::make_pair(d, j);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, linearization_general(d, j, LinMode::recursion)).first;
    return it->second;
  };

  Rational prefix = weights[0];
  for (size_t t = 1; t < degrees.size(); ++t) {
    prefix += weights[t];
    Rational b = weights[t] / prefix;  // weight of the new factor within the prefix
    std::vector<Rational> next(total + 1);
    for (unsigned j = 0; j <= cur_max; ++j) {
      if (cur[j].is_zero()) continue;
      const CoeffTable& tab = two_factor(degrees[t], j);
      for (size_t kk = 0; kk < tab.entries.size(); ++kk) {
        if (tab.entries[kk].is_zero()) continue;
        next[kk] += cur[j] * tab.entries[kk].eval(b);
      }
    }
    cur = std::move(next);
    cur_max += degrees[t];
  }
  return make_product_table(degrees, weights, std::move(cur));
}

CoeffTable product_expansion_oracle(std::span<const unsigned> degrees, std::span<const Rational> weights) {
  check_product_args(degrees, weights);
  UPoly prod = UPoly::constant(1);
  for (size_t i = 0; i < degrees.size(); ++i)
    prod *= q_poly(degrees[i]).scale_arg(weights[i]);
  BesselExpansion e = poly_to_bessel(prod);
  unsigned total = std::accumulate(degrees.begin(), degrees.end(), 0u);
  e.coeffs.resize(total + 1);
  return make_product_table(degrees, weights, std::move(e.coeffs));
}

BernsteinCertificate bernstein_certify(const APoly& p, unsigned degree) {
  int d = p.degree();
  if (d > static_cast<int>(degree))
    throw std::invalid_argument("bernstein_certify: degree below deg(p)");

  // b_i = sum_{j<=min(i,d)} C(i,j)/C(D,j) c_j for p = sum_j c_j a^j.
  BernsteinCertificate cert;
  cert.poly = p;
  cert.degree_used = degree;
  cert.bernstein_coeffs.resize(degree + 1);
  bool all_nonneg = true;
  for (unsigned i = 0; i <= degree; ++i) {
    Rational b(0);
    for (int j = 0; j <= d && j <= static_cast<int>(i); ++j) {
      if (p.coeff(j).is_zero()) continue;
      b += p.coeff(j) * Rational(binomial(i, j), binomial(degree, j));
    }
    if (b.sign() < 0) all_nonneg = false;
    cert.bernstein_coeffs[i] = std::move(b);
  }
  cert.verdict = all_nonneg ? BernsteinCertificate::Verdict::certified_nonneg
                            : BernsteinCertificate::Verdict::indeterminate;
  return cert;
}

BernsteinCertificate bernstein_certify_elevating(const APoly& p, unsigned degree_cap) {
  unsigned d = static_cast<unsigned>(std::max(p.degree(), 0));
  if (d > degree_cap)
    throw std::invalid_argument("bernstein_certify_elevating: cap below deg(p)");
  unsigned trial = d;
  for (;;) {
    BernsteinCertificate cert = bernstein_certify(p, trial);
    if (cert.certified() || trial >= degree_cap) return cert;
    trial = std::min(degree_cap, std::max(2 * trial, trial + 1));
  }
}

Rational min_on_grid(const APoly& p, unsigned points) {
  if (points == 0) throw std::invalid_argument("min_on_grid: points must be positive");
  Rational best = p.eval(Rational(0));
  for (unsigned i = 1; i <= points; ++i) {
    Rational v = p.eval(Rational(static_cast<long>(i), static_cast<long>(points)));
    if (v < best) best = v;
  }
  return best;
}

}  // namespace linz
