#pragma once

#include <linz/coefficients.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace linz {

// Probabilistic layer. The Student-t distributions here are the unscaled
// family with density
//
//   f_nu(x) = A_nu (1+x^2)^{-nu-1/2},  A_nu = Gamma(nu+1/2)/(Gamma(1/2)Gamma(nu)),
//
// at half-integer order nu = n + 1/2 (2n+1 degrees of freedom; n = 0 is
// Cauchy). Its characteristic function is e^{-|y|} q_n(|y|). Everything in
// this module is double precision; exact arithmetic stops at the mixture
// weights, which are evaluated from the coefficient tables as rationals
// before any float conversion.

/// Student-t with 2n+1 degrees of freedom (nu = n + 1/2), unscaled.
struct StudentT {
  unsigned n = 0;
};

/// Inverse-Gamma with shape nu = n + 1/2 and scale 1/4:
/// density C_nu exp(-1/(4t)) t^{-nu-1}, C_nu = 1/(2^{2nu} Gamma(nu)).
struct InverseGamma {
  unsigned n = 0;
};

double student_density(const StudentT& s, double x);

/// Closed-form CDF: arctan plus a rational function, via the reduction
/// integral of (1+x^2)^{-m}. Monotone, F(0) = 1/2.
double student_cdf(const StudentT& s, double x);

/// Characteristic-function kernel e^{-|y|} q_n(|y|); equals 1 at y = 0.
double char_function_k(unsigned n, double y);

double inverse_gamma_density(const InverseGamma& g, double t);

/// CDF via the regularized upper incomplete gamma at half-integer shape:
/// Q(1/2, y) = erfc(sqrt(y)) plus the telescoped correction terms.
double inverse_gamma_cdf(const InverseGamma& g, double t);

/// Finite mixture over half-integer orders: component (k, w) stands for
/// weight w on order nu = k + 1/2 (Student-t or inverse-Gamma, per use).
struct MixtureComponent {
  unsigned k = 0;
  Rational weight;
};

struct MixtureSpec {
  std::vector<MixtureComponent> components;  // strictly positive weights

  /// Throws unless all weights are > 0 and sum to exactly 1.
  void validate() const;
  double student_cdf_mix(double x) const;
  double inverse_gamma_cdf_mix(double x) const;
};

/// Evaluates a coefficient table at a rational a and returns the nonzero
/// weights as an exact mixture. Throws if any evaluated weight is negative —
/// that would contradict the positivity the tables are certified for — or if
/// the weights do not sum to 1.
MixtureSpec mixture_from_table(const CoeffTable& table, const Rational& a);

/// Mixture law of the two-sample statistic t1 sin(theta) - t2 cos(theta) for
/// odd degrees of freedom f1 = 2n+1, f2 = 2m+1: Pr{F = 2k+1} =
/// beta_k^{(n,m)}(a) at a = sin(theta). sin(theta) is carried into the exact
/// layer as the dyadic rational equal to its double value, so weights still
/// sum to exactly 1. With normalized = true the statistic is rescaled by
/// 1/(sin(theta)+cos(theta)) and a = sin/(sin+cos), making the coefficient
/// weights of the two variables sum to 1.
MixtureSpec d_statistic_table(unsigned f1, unsigned f2, double theta, bool normalized = false);

/// Deterministic RNG stack: mt19937_64 with explicit Box-Muller normals and
/// Marsaglia-Tsang gamma rejection, so streams are reproducible from the
/// seed alone (no reliance on unspecified std::*_distribution algorithms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }
  /// Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }
  /// Standard normal via Box-Muller (cosine branch; two uniforms per draw).
  double normal();
  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 handled by the
  /// usual boost Gamma(shape+1) * U^{1/shape}.
  double gamma(double shape);
  /// Inverse-Gamma(n + 1/2, scale 1/4) as 1/(4 Gamma(n+1/2, 1)).
  double inverse_gamma_half(unsigned n) { return 1.0 / (4.0 * gamma(n + 0.5)); }
  /// Student-t (2n+1 dof) by subordination: T ~ InvGamma(n+1/2, 1/4), then
  /// X ~ Normal(0, 2T) to match the variance-2t Gaussian family.
  double student_t_half(unsigned n) { return std::sqrt(2.0 * inverse_gamma_half(n)) * normal(); }

 private:
  std::mt19937_64 gen_;
};

/// Kolmogorov-Smirnov distance between sorted samples and a reference CDF.
template <class Cdf>
double ks_statistic_sorted(const std::vector<double>& sorted, Cdf&& cdf) {
  double d = 0.0;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double f = cdf(sorted[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

/// Asymptotic one-sample KS critical value at alpha = 0.01.
inline double ks_critical_alpha01(std::size_t samples) {
  return 1.628 / std::sqrt(static_cast<double>(samples));
}

struct KsReport {
  std::string kind;  // "student-convolution" or "inverse-gamma"
  unsigned n = 0, m = 0;
  std::string a;  // exact rational string
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double ks_statistic = 0.0;
  double critical_value = 0.0;
  bool pass = false;
};

/// Samples a X_n + (1-a) X_m for independent Student-t X_n, X_m and compares
/// against the exact mixture CDF sum_k beta_k^{(n,m)}(a) F_{k+1/2}. Sampling
/// is blocked with per-block seeds derived from (seed, block index), so
/// results are reproducible and independent of any worker fan-out.
KsReport mc_convolution_check(unsigned n, unsigned m, const Rational& a,
                              std::size_t samples, std::uint64_t seed);

/// Same policy for a^2 Z_n + (1-a)^2 Z_m against the inverse-Gamma mixture.
KsReport mc_inverse_gamma_check(unsigned n, unsigned m, const Rational& a,
                                std::size_t samples, std::uint64_t seed);

}  // namespace linz
