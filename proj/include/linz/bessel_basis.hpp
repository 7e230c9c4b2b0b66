#pragma once

#include <linz/polynomial.hpp>

#include <vector>

namespace linz {

// The Bessel polynomials used throughout this library are normalized so that
// q_n(0) = 1:
//
//   q_n(u) = sum_{k=0}^{n} alpha_coeff(n,k) u^k,
//   alpha_coeff(n,k) = n! (2n-k)! 2^k / ((2n)! (n-k)! k!).
//
// q_0 = 1, q_1 = 1 + u, q_2 = 1 + u + u^2/3. All operations here are exact.

/// Monomial coefficient of u^k in q_n. Requires k <= n; always positive.
Rational alpha_coeff(unsigned n, unsigned k);

/// q_n as an exact polynomial in u.
UPoly q_poly(unsigned n);

/// One step of the three-term recursion
///   q_{n+1}(u) = q_n(u) + u^2/(4n^2-1) q_{n-1}(u),  n >= 1.
/// Callers pass q_n and q_{n-1}; requires n >= 1.
UPoly q_rec(unsigned n, const UPoly& q_n, const UPoly& q_prev);

/// Checks q_n'(u) == q_n(u) - u/(2n-1) q_{n-1}(u) exactly. Requires n >= 1.
bool q_derivative_identity_holds(unsigned n);

/// Carlitz change-of-basis coefficient delta_i^{(n)} in
///   u^n = sum_i delta_i^{(n)} q_i(u).
/// Zero for i < (n-1)/2; requires i <= n.
Rational carlitz_delta(unsigned n, unsigned i);

/// A polynomial expressed in the Bessel basis {q_0, ..., q_max}.
struct BesselExpansion {
  std::vector<Rational> coeffs;  // index = q-basis degree

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// sum_k coeffs[k] * q_k(u), exactly.
  UPoly reconstruct() const;
};

/// Expansion of u^n via the Carlitz formula.
BesselExpansion monomial_to_bessel(unsigned n);

/// Expansion of an arbitrary polynomial by back-substitution from the highest
/// degree (q_k is the only basis element of degree k, with leading coefficient
/// alpha_coeff(k,k)). Independent of carlitz_delta; serves as its oracle.
BesselExpansion poly_to_bessel(const UPoly& p);

/// Coefficient gamma_i^{(n,k)} in the power-shift expansion
///   u^{2k} q_{n-k}(u) = sum_{i=0}^{k} gamma_i^{(n,k)} q_{n+i}(u),
/// namely 2^{2k} C(k,i) (n-k+1/2)_{k+i} (-n-1/2)_{k-i}. Requires i <= k <= n.
Rational gamma_coeff(unsigned n, unsigned k, unsigned i);

/// Checks the power-shift expansion above as an exact polynomial identity.
bool gamma_expansion_identity_holds(unsigned n, unsigned k);

/// Checks the half-integer-order Bessel-function recursion
///   u^{2j} k_{nu-j}(u) = sum_i (-1)^{j-i} 2^{2j} C(j,i)
///       [Gamma(nu+1)Gamma(nu+i) / (Gamma(nu+1-(j-i))Gamma(nu-j))] k_{nu+i}(u)
/// at nu = n + 1/2, where k_{m+1/2}(u) = e^{-u} q_m(u). After cancelling
/// e^{-u} this is a polynomial identity; the Gamma ratios are computed as
/// exact rational Pochhammer products. Requires j <= n.
bool half_integer_bessel_recursion_check(unsigned n, unsigned j);

}  // namespace linz
