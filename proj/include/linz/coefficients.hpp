#pragma once

#include <linz/bessel_basis.hpp>

#include <span>
#include <vector>

namespace linz {

// Coefficient families handled here, all exact polynomials in the mixing
// parameter a:
//
//   connection          q_n(a u)            = sum_k  c_k^{(n)}(a)     q_k(u)
//   linearization equal q_n(a u) q_n((1-a)u) = sum_i  beta_i^{(n)}(a)  q_{n+i}(u)
//   linearization       q_n(a u) q_m((1-a)u) = sum_k  beta_k^{(n,m)}(a) q_k(u)
//   product             q_{n_1}(a_1 u) ... q_{n_r}(a_r u) = sum_j beta_j q_j(u)
//
// Each family has at least two independent computation routes; disagreement
// between routes is treated as a bug, never resolved silently.

enum class TableKind { connection, linearization_equal, linearization_general, product };
enum class LinMode { recursion, oracle };

struct CoeffTable {
  TableKind kind{};
  std::vector<unsigned> degrees;   // (n), (n,m), or the product degree list
  std::vector<Rational> weights;   // product tables: the a_i
  bool symbolic = true;            // false once evaluated at a fixed a
  std::vector<APoly> entries;      // index = q-basis degree k, starting at 0

  unsigned max_index() const { return entries.empty() ? 0 : static_cast<unsigned>(entries.size()) - 1; }
  APoly entry_sum() const;
  /// First index with a nonzero entry (entries.size() if all zero).
  unsigned support_min() const;
  /// Same table with every entry evaluated at a (entries become constants).
  CoeffTable evaluated_at(const Rational& a) const;
};

/// Closed form for the connection coefficient c_k^{(n)}(a):
///   c_n^{(n)}(a) = a^n, and for k < n
///   c_k^{(n)}(a) = a^k C(n,k)/C(2n,2k)
///                  sum_{r=1}^{(n-k) ^ (k+1)} C(n+1,k+1-r) C(n-k-1,r-1) (1-a)^r.
APoly connection_closed(unsigned n, unsigned k);

/// All rows c_0..c_n via the closed form.
CoeffTable connection_table(unsigned n);

/// Independent route: c_k^{(n)}(a) = sum_{j=k}^{n} a^j alpha_j^{(n)} delta_k^{(j)}.
CoeffTable connection_oracle(unsigned n);

/// Closed form for the equal-degree linearization coefficient:
///   beta_i^{(n)}(a) = (4a(1-a))^i (n!/(2n)!)^2 2^{-2n}
///                     (2n-2i)!(2n+2i)!/((n-i)!(n+i)!)
///                     sum_{j=0}^{n-i} C(2n+1,2j) C(n-j,i) (2a-1)^{2j}.
APoly linearization_equal_closed(unsigned n, unsigned i);

/// Table over q-basis index k = 0..2n with entry k = n+i equal to
/// linearization_equal_closed(n, i).
CoeffTable linearization_equal_table(unsigned n);

/// Independent route for the equal-degree table: expand
///   q_n(au) q_n((1-a)u) = sum_k alpha_k^{(n)} (a(1-a))^k
///                         (1/2)_{n-k} / (2^k (1/2)_n) u^{2k} q_{n-k}(u)
/// and resolve each u^{2k} q_{n-k} through gamma_coeff.
CoeffTable macdonald_product_expand(unsigned n);

/// General linearization table beta_k^{(n,m)}(a), k = 0..n+m.
///
/// oracle mode: expand q_n(au) q_m((1-a)u) with polynomial-in-a coefficients
/// and back-substitute against the q basis degree by degree.
///
/// recursion mode: rows (i,0) come from the connection closed form, rows
/// (0,j) from the a <-> 1-a symmetry, and interior rows from
///   beta_{k+1}^{(n,m)}(a) = (2k+1) [ a^2/(2n-1) beta_k^{(n-1,m)}(a)
///                                  + (1-a)^2/(2m-1) beta_k^{(n,m-1)}(a) ],
/// with beta_0^{(n,m)} = 0 for n,m >= 1.
CoeffTable linearization_general(unsigned n, unsigned m, LinMode mode);

/// Multi-factor product table for q_{n_1}(a_1 u)...q_{n_r}(a_r u) with
/// positive weights summing to 1. Built by iterating the two-factor step
/// with rescaled inner weights a_j/(1-a_r); the two-factor tables come from
/// the recursion route evaluated at the rescaled weight.
CoeffTable product_expansion(std::span<const unsigned> degrees, std::span<const Rational> weights);

/// Independent route: multiply the factors as exact polynomials in u and run
/// one change of basis.
CoeffTable product_expansion_oracle(std::span<const unsigned> degrees, std::span<const Rational> weights);

/// Nonnegativity certificate for a polynomial on [0,1] via its exact
/// Bernstein coefficients: p = sum_i b_i C(D,i) a^i (1-a)^{D-i}. If every
/// b_i >= 0 then p >= 0 on [0,1]; the converse fails, so the verdict is
/// either certified_nonneg or indeterminate, never "negative".
struct BernsteinCertificate {
  enum class Verdict { certified_nonneg, indeterminate };
  APoly poly;
  unsigned degree_used = 0;
  std::vector<Rational> bernstein_coeffs;
  Verdict verdict = Verdict::indeterminate;

  bool certified() const { return verdict == Verdict::certified_nonneg; }
};

/// Bernstein coefficients of p at the given degree (>= deg p, else throws).
BernsteinCertificate bernstein_certify(const APoly& p, unsigned degree);

/// Retries with raised degree (degree elevation can only help: elevated
/// coefficients are convex combinations of the lower-degree ones) up to
/// degree_cap. Returns the first certified result, or the indeterminate
/// result at degree_cap.
BernsteinCertificate bernstein_certify_elevating(const APoly& p, unsigned degree_cap);

/// Exact minimum of p over the grid a = i/points, i = 0..points. Diagnostic
/// companion to an indeterminate certificate; not a proof of nonnegativity.
Rational min_on_grid(const APoly& p, unsigned points);

}  // namespace linz
