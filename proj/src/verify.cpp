#include <linz/verify.hpp>

#include <linz/util.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

namespace linz {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult finish(std::string name, bool pass, const Timer& t, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = pass;
  r.seconds = t.seconds();
  r.detail = std::move(detail);
  return r;
}

std::string cell_str(unsigned n, unsigned m) {
  return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

}  // namespace

CheckResult verify_basis(unsigned max_n) {
  Timer t;
  UPoly prev = q_poly(0), cur = q_poly(1);
  if (prev != UPoly({1}) || cur != UPoly({1, 1}))
    return finish("basis", false, t, "q_0/q_1 mismatch");
  for (unsigned n = 1; n + 1 <= max_n; ++n) {
    UPoly next = q_rec(n, cur, prev);
    if (next != q_poly(n + 1))
      return finish("basis", false, t, "recursion chain disagrees at n=" + std::to_string(n + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  for (unsigned n = 1; n <= max_n; ++n)
    if (!q_derivative_identity_holds(n))
      return finish("basis", false, t, "derivative identity fails at n=" + std::to_string(n));
  return finish("basis", true, t,
                "recursion chain and derivative identity exact for n<=" + std::to_string(max_n));
}

CheckResult verify_carlitz(unsigned max_n) {
  Timer t;
  for (unsigned n = 0; n <= max_n; ++n) {
    BesselExpansion formula = monomial_to_bessel(n);
    BesselExpansion solved = poly_to_bessel(UPoly::monomial(n));
    if (formula.coeffs != solved.coeffs)
      return finish("carlitz", false, t, "formula vs solve disagree at n=" + std::to_string(n));
    if (formula.reconstruct() != UPoly::monomial(n))
      return finish("carlitz", false, t, "round-trip fails at n=" + std::to_string(n));
  }
  return finish("carlitz", true, t, "exact for n<=" + std::to_string(max_n));
}

CheckResult verify_gamma_expansion(unsigned max_n) {
  Timer t;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned k = 0; k <= n; ++k)
      if (!gamma_expansion_identity_holds(n, k))
        return finish("gamma-expansion", false, t, "fails at n=" + std::to_string(n) + ",k=" + std::to_string(k));
  return finish("gamma-expansion", true, t, "exact for k<=n<=" + std::to_string(max_n));
}

CheckResult verify_half_integer_recursion(unsigned max_n) {
  Timer t;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned j = 0; j <= n; ++j)
      if (!half_integer_bessel_recursion_check(n, j))
        return finish("half-integer-recursion", false, t,
                      "fails at n=" + std::to_string(n) + ",j=" + std::to_string(j));
  return finish("half-integer-recursion", true, t, "exact for j<=n<=" + std::to_string(max_n));
}

CheckResult verify_connection(unsigned max_n) {
  Timer t;
  const APoly one = APoly::constant(1);
  for (unsigned n = 0; n <= max_n; ++n) {
    CoeffTable closed = connection_table(n);
    CoeffTable oracle = connection_oracle(n);
    if (closed.entries != oracle.entries)
      return finish("connection", false, t, "closed vs oracle disagree at n=" + std::to_string(n));
    if (closed.entry_sum() != one)
      return finish("connection", false, t, "row sum != 1 at n=" + std::to_string(n));
    if (closed.entries[n] != APoly::monomial(n))
      return finish("connection", false, t, "top entry != a^n at n=" + std::to_string(n));
  }
  return finish("connection", true, t, "closed == oracle, convex rows, for n<=" + std::to_string(max_n));
}

CheckResult verify_linearization_equal(unsigned max_n) {
  Timer t;
  // Hand-derived fixture: (1+au)(1+(1-a)u) = (1-3a(1-a)) q_1 + 3a(1-a) q_2.
  if (linearization_equal_closed(1, 0) != APoly({1, -3, 3}) ||
      linearization_equal_closed(1, 1) != APoly({0, 3, -3}))
    return finish("linearization-equal", false, t, "n=1 fixture mismatch");

  std::vector<std::string> errors(max_n + 1);
  parallel_for_index(max_n + 1, [&](std::size_t n_idx) {
    unsigned n = static_cast<unsigned>(n_idx);
    CoeffTable closed = linearization_equal_table(n);
    CoeffTable expanded = macdonald_product_expand(n);
    CoeffTable generic = linearization_general(n, n, LinMode::oracle);
    if (closed.entries != expanded.entries)
      errors[n_idx] = "closed vs integral-formula route at n=" + std::to_string(n);
    else if (closed.entries != generic.entries)
      errors[n_idx] = "closed vs generic product route at n=" + std::to_string(n);
  });
  for (const auto& e : errors)
    if (!e.empty()) return finish("linearization-equal", false, t, e);
  return finish("linearization-equal", true, t, "three routes agree exactly for n<=" + std::to_string(max_n));
}

CheckResult verify_linearization_general(unsigned max_n, unsigned max_m, bool profile) {
  Timer t;
  const unsigned cols = max_m + 1;
  const std::size_t cells = static_cast<std::size_t>(max_n + 1) * cols;
  std::vector<CoeffTable> oracle(cells);
  std::vector<std::string> errors(cells);
  std::vector<unsigned> max_cert_degree(cells, 0);

  parallel_for_index(cells, [&](std::size_t idx) {
    unsigned n = static_cast<unsigned>(idx / cols), m = static_cast<unsigned>(idx % cols);
    Timer cell_timer;
    CoeffTable orc = linearization_general(n, m, LinMode::oracle);
    CoeffTable rec = linearization_general(n, m, LinMode::recursion);
    std::ostringstream err;
    if (orc.entries != rec.entries) {
      err << "recursion vs oracle disagree at " << cell_str(n, m);
    } else if (orc.entry_sum() != APoly::constant(1)) {
      err << "entries do not sum to 1 at " << cell_str(n, m);
    } else if (n >= 1 && m >= 1 && !orc.entries[0].is_zero()) {
      err << "beta_0 != 0 at " << cell_str(n, m);
    } else if (orc.support_min() < std::min(n, m)) {
      err << "support below min(n,m) at " << cell_str(n, m);
    } else {
      // a-degree is only known empirically; assert instead of assuming.
      for (const auto& e : orc.entries)
        if (e.degree() > static_cast<int>(n + m)) {
          err << "entry degree exceeds n+m at " << cell_str(n, m);
          break;
        }
      unsigned cap = 4 * (n + m);
      for (unsigned k = 0; k < orc.entries.size() && err.str().empty(); ++k) {
        BernsteinCertificate cert = bernstein_certify_elevating(orc.entries[k], cap);
        if (!cert.certified()) {
          err << "no nonnegativity certificate for entry k=" << k << " at " << cell_str(n, m)
              << " up to degree " << cap << " (grid min " << min_on_grid(orc.entries[k], 1000).str()
              << ")";
        } else {
          max_cert_degree[idx] = std::max(max_cert_degree[idx], cert.degree_used);
        }
      }
    }
    errors[idx] = err.str();
    oracle[idx] = std::move(orc);
    if (profile) {
      std::ostringstream line;
      line << "cell " << cell_str(n, m) << ": " << cell_timer.seconds() * 1e3 << " ms\n";
      std::cerr << line.str();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) return finish("linearization-general", false, t, e);

  // Symmetry across the grid: beta^{(n,m)}(a) == beta^{(m,n)}(1-a).
  unsigned sym_max = std::min(max_n, max_m);
  for (unsigned n = 0; n <= sym_max; ++n) {
    for (unsigned m = 0; m <= sym_max; ++m) {
      const auto& ab = oracle[static_cast<std::size_t>(n) * cols + m].entries;
      const auto& ba = oracle[static_cast<std::size_t>(m) * cols + n].entries;
      for (size_t k = 0; k < ab.size(); ++k)
        if (ab[k] != ba[k].compose_affine(1, -1))
          return finish("linearization-general", false, t, "symmetry fails at " + cell_str(n, m));
    }
  }
  unsigned deg = 0;
  for (unsigned d : max_cert_degree) deg = std::max(deg, d);
  return finish("linearization-general", true, t,
                "all cells n<=" + std::to_string(max_n) + ", m<=" + std::to_string(max_m) +
                    " pass; max certificate degree " + std::to_string(deg));
}

CheckResult verify_beta_recursion_consistency(unsigned max_n, unsigned max_m) {
  Timer t;
  const unsigned cols = max_m + 1;
  std::vector<CoeffTable> grid(static_cast<std::size_t>(max_n + 1) * cols);
  parallel_for_index(grid.size(), [&](std::size_t idx) {
    grid[idx] = linearization_general(static_cast<unsigned>(idx / cols),
                                      static_cast<unsigned>(idx % cols), LinMode::oracle);
  });
  const APoly a_sq({0, 0, 1}), oma_sq({1, -2, 1});
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned m = 1; m <= max_m; ++m) {
      const auto& bnm = grid[static_cast<std::size_t>(n) * cols + m].entries;
      const auto& up = grid[static_cast<std::size_t>(n - 1) * cols + m].entries;
      const auto& left = grid[static_cast<std::size_t>(n) * cols + (m - 1)].entries;
      for (unsigned k = 0; k + 1 <= n + m; ++k) {
        APoly lhs = bnm[k + 1] * Rational(1, 2 * static_cast<long>(k) + 1);
        APoly rhs = a_sq * (up[k] * Rational(1, 2 * static_cast<long>(n) - 1)) +
                    oma_sq * (left[k] * Rational(1, 2 * static_cast<long>(m) - 1));
        if (lhs != rhs)
          return finish("beta-recursion", false, t,
                        "identity fails at " + cell_str(n, m) + ", k=" + std::to_string(k));
      }
    }
  }
  return finish("beta-recursion", true, t,
                "derivative recursion exact on oracle tables for n,m<=" + std::to_string(max_n));
}

CheckResult verify_product(unsigned instances, unsigned max_factors, unsigned max_degree,
                           std::uint64_t seed) {
  Timer t;
  std::mt19937_64 gen(seed);
  auto rnd = [&gen](unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(gen() % (hi - lo + 1));
  };
  for (unsigned inst = 0; inst < instances; ++inst) {
    unsigned factors = rnd(2, max_factors);
    std::vector<unsigned> degrees(factors);
    for (auto& d : degrees) d = rnd(0, max_degree);
    std::vector<long> raw(factors);
    long total = 0;
    for (auto& w : raw) {
      w = static_cast<long>(rnd(1, 9));
      total += w;
    }
    std::vector<Rational> weights(factors);
    for (unsigned i = 0; i < factors; ++i) weights[i] = Rational(raw[i], total);

    CoeffTable iterated = product_expansion(degrees, weights);
    CoeffTable direct = product_expansion_oracle(degrees, weights);
    std::string what;
    if (iterated.entries != direct.entries) {
      what = "iterated vs direct disagree";
    } else if (iterated.entry_sum() != APoly::constant(1)) {
      what = "entries do not sum to 1";
    } else {
      for (const auto& e : iterated.entries)
        if (!e.is_zero() && e.coeff(0).sign() < 0) {
          what = "negative entry";
          break;
        }
      unsigned lo = *std::min_element(degrees.begin(), degrees.end());
      if (what.empty() && iterated.support_min() < lo) what = "support below min degree";
    }
    if (!what.empty()) {
      std::ostringstream os;
      os << what << " for degrees (";
      for (size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
      os << "), weights (";
      for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i].str();
      os << ")";
      return finish("product", false, t, os.str());
    }
  }
  return finish("product", true, t,
                std::to_string(instances) + " random instances, <=" + std::to_string(max_factors) +
                    " factors, exact agreement");
}

CheckResult verify_fourier(unsigned max_n, unsigned max_m) {
  Timer t;
  const std::vector<Rational> as = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(9, 10)};
  double worst = 0.0;
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned m = 0; m <= max_m; ++m) {
      CoeffTable table = linearization_general(n, m, LinMode::oracle);
      for (const auto& a : as) {
        std::vector<double> w(table.entries.size());
        for (size_t k = 0; k < w.size(); ++k) w[k] = table.entries[k].eval(a).to_double();
        double ad = a.to_double();
        for (unsigned g = 1; g <= 100; ++g) {
          double u = 0.1 * g;
          double eu = std::exp(-u);
          double lhs = eu * q_poly(n).eval_double(ad * u) * q_poly(m).eval_double((1.0 - ad) * u);
          double rhs = 0.0;
          for (size_t k = 0; k < w.size(); ++k)
            if (w[k] != 0.0) rhs += w[k] * eu * q_poly(static_cast<unsigned>(k)).eval_double(u);
          double rel = std::fabs(lhs - rhs) / std::max(std::fabs(lhs), std::fabs(rhs));
          worst = std::max(worst, rel);
          if (rel > 1e-12)
            return finish("fourier", false, t,
                          "relative error " + std::to_string(rel) + " at " + cell_str(n, m) +
                              ", a=" + a.str() + ", u=" + std::to_string(u));
        }
      }
    }
  }
  std::ostringstream os;
  os << "max relative error " << worst << " (tolerance 1e-12)";
  return finish("fourier", true, t, os.str());
}

namespace {

CheckResult verify_montecarlo(const char* name, bool student, const std::vector<McConfig>& configs,
                              std::size_t samples, const std::vector<std::uint64_t>& seeds) {
  Timer t;
  bool all_pass = true;
  std::ostringstream detail;
  for (const auto& [n, m, a] : configs) {
    unsigned passes = 0;
    std::ostringstream stats;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      KsReport r = student ? mc_convolution_check(n, m, a, samples, seeds[s])
                           : mc_inverse_gamma_check(n, m, a, samples, seeds[s]);
      if (r.pass) ++passes;
      stats << (s ? "," : "") << r.ks_statistic;
    }
    bool ok = 3 * passes >= 2 * seeds.size();  // majority policy: >= 2/3 of seeds
    all_pass = all_pass && ok;
    detail << cell_str(n, m) << " a=" << a.str() << ": D={" << stats.str() << "} passes "
           << passes << "/" << seeds.size() << (ok ? "" : " FAIL") << "; ";
  }
  detail << "critical " << ks_critical_alpha01(samples);
  return finish(name, all_pass, t, detail.str());
}

}  // namespace

CheckResult verify_montecarlo_student(const std::vector<McConfig>& configs, std::size_t samples,
                                      const std::vector<std::uint64_t>& seeds) {
  return verify_montecarlo("montecarlo-student", true, configs, samples, seeds);
}

CheckResult verify_montecarlo_invgamma(const std::vector<McConfig>& configs, std::size_t samples,
                                       const std::vector<std::uint64_t>& seeds) {
  return verify_montecarlo("montecarlo-invgamma", false, configs, samples, seeds);
}

std::vector<McConfig> default_mc_configs() {
  return {{0, 0, Rational(1, 2)}, {1, 1, Rational(1, 2)}, {2, 1, Rational(1, 3)}, {3, 2, Rational(1, 4)}};
}

std::vector<std::uint64_t> default_mc_seeds() { return {42, 1337, 271828}; }

}  // namespace linz
