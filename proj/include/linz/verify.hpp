#pragma once

#include <linz/stochastic.hpp>

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace linz {

/// Outcome of one verification suite. `detail` is a short human-readable
/// summary (counts, worst statistics); failures append what broke and where.
struct CheckResult {
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::string detail;
};

/// q_n by definition vs the three-term recursion chain, plus the derivative
/// identity, for all n <= max_n. Exact.
CheckResult verify_basis(unsigned max_n);

/// Carlitz coefficients vs the independent triangular solve of u^n, plus the
/// exact reconstruction round-trip, for all n <= max_n.
CheckResult verify_carlitz(unsigned max_n);

/// Power-shift identity u^{2k} q_{n-k} = sum_i gamma_i^{(n,k)} q_{n+i} for
/// all 0 <= k <= n <= max_n. Exact.
CheckResult verify_gamma_expansion(unsigned max_n);

/// Half-integer Bessel-function recursion for all j <= n <= max_n after the
/// e^{-u} substitution. Exact.
CheckResult verify_half_integer_recursion(unsigned max_n);

/// Connection coefficients: closed form equals the alpha x delta route, rows
/// sum to 1, top row is a^n, for all n <= max_n. Exact.
CheckResult verify_connection(unsigned max_n);

/// Equal-degree linearization: closed form equals both the integral-formula
/// expansion and the generic product route, for all n <= max_n; includes the
/// hand-derived n = 1 fixture. Exact.
CheckResult verify_linearization_equal(unsigned max_n);

/// General linearization for all n <= max_n, m <= max_m: recursion route
/// equals oracle route, beta_0 = 0 for n,m >= 1, entries below min(n,m)
/// vanish, the a <-> 1-a symmetry holds, and every entry gets a Bernstein
/// nonnegativity certificate with degree elevation capped at 4(n+m).
CheckResult verify_linearization_general(unsigned max_n, unsigned max_m, bool profile = false);

/// The first-derivative recursion as a polynomial identity between
/// oracle-route tables, for all n,m in [1, max_n] x [1, max_m].
CheckResult verify_beta_recursion_consistency(unsigned max_n, unsigned max_m);

/// Random multi-factor products: iterated two-factor expansion equals the
/// direct monomial-route expansion; entries nonnegative, summing to 1.
CheckResult verify_product(unsigned instances, unsigned max_factors, unsigned max_degree,
                           std::uint64_t seed);

/// Fourier-side restatement: e^{-u} q_n(au) q_m((1-a)u) equals
/// sum_k beta_k(a) e^{-u} q_k(u) to relative 1e-12 on u in {0.1, ..., 10},
/// for n,m <= max bounds and a in {1/4, 1/3, 1/2, 9/10}.
CheckResult verify_fourier(unsigned max_n, unsigned max_m);

using McConfig = std::tuple<unsigned, unsigned, Rational>;

/// Monte Carlo: for each (n,m,a) config, the convex combination of Student-t
/// samples must pass the KS test at alpha = 0.01 for at least 2 of the given
/// seeds. All configs must pass.
CheckResult verify_montecarlo_student(const std::vector<McConfig>& configs, std::size_t samples,
                                      const std::vector<std::uint64_t>& seeds);

/// Same policy for the inverse-Gamma form a^2 Z_n + (1-a)^2 Z_m.
CheckResult verify_montecarlo_invgamma(const std::vector<McConfig>& configs, std::size_t samples,
                                       const std::vector<std::uint64_t>& seeds);

/// The default Monte Carlo parameter set used by the acceptance run.
std::vector<McConfig> default_mc_configs();

/// The default seed triple used by the acceptance run.
std::vector<std::uint64_t> default_mc_seeds();

}  // namespace linz
