#include <linz/stochastic.hpp>

#include <linz/util.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linz {

namespace {

// A_nu = Gamma(n+1)/(Gamma(1/2)Gamma(n+1/2)) = (1/pi) prod_{j=1..n} 2j/(2j-1).
double student_norm_const(unsigned n) {
  double a = 1.0 / M_PI;
  for (unsigned j = 1; j <= n; ++j) a *= (2.0 * j) / (2.0 * j - 1.0);
  return a;
}

}  // namespace

double student_density(const StudentT& s, double x) {
  return student_norm_const(s.n) * std::pow(1.0 + x * x, -(static_cast<double>(s.n) + 1.0));
}

double student_cdf(const StudentT& s, double x) {
  double ax = std::fabs(x);
  double f;
  if (ax < 1.0) {
    // central region: F = 1/2 + A I_{n+1}(x) with
    //   I_1 = atan(x),  I_{m+1} = x/(2m (1+x^2)^m) + (2m-1)/(2m) I_m;
    // every term carries the sign of x, so there is no cancellation here.
    double im = std::atan(x);
    double w = 1.0 + x * x;
    double wpow = 1.0;  // (1+x^2)^m
    for (unsigned m = 1; m <= s.n; ++m) {
      wpow *= w;
      im = x / (2.0 * m * wpow) + (2.0 * m - 1.0) / (2.0 * m) * im;
    }
    f = 0.5 + student_norm_const(s.n) * im;
  } else {
    // tail region: with s = 1/(1+x^2) <= 1/2 and nu = n + 1/2,
    //   P(X > x) = (A/2) B(s; nu, 1/2) = (A/2) s^nu sum_k (1/2)_k s^k / (k! (nu+k)).
    // All terms are positive, which keeps the tail monotone in floating point
    // where the 1/2 + A I form would drown in cancellation.
    double sv = 1.0 / (1.0 + ax * ax);
    double nu = s.n + 0.5;
    double sum = 0.0;
    double c = 1.0;  // (1/2)_k s^k / k!
    for (unsigned k = 0; k < 500; ++k) {
      double term = c / (nu + k);
      sum += term;
      if (term < sum * 1e-18) break;
      c *= sv * (0.5 + k) / (k + 1.0);
    }
    double tail = 0.5 * student_norm_const(s.n) * std::pow(sv, nu) * sum;
    f = x > 0.0 ? 1.0 - tail : tail;
  }
  return std::min(1.0, std::max(0.0, f));
}

double char_function_k(unsigned n, double y) {
  double u = std::fabs(y);
  return std::exp(-u) * q_poly(n).eval_double(u);
}

double inverse_gamma_density(const InverseGamma& g, double t) {
  if (t <= 0.0) return 0.0;
  // C_nu = 1/(2^{2nu} Gamma(nu)), nu = n + 1/2.
  double nu = g.n + 0.5;
  double log_c = -2.0 * nu * std::log(2.0) - std::lgamma(nu);
  return std::exp(log_c - 1.0 / (4.0 * t) - (nu + 1.0) * std::log(t));
}

double inverse_gamma_cdf(const InverseGamma& g, double t) {
  if (t <= 0.0) return 0.0;
  double y = 1.0 / (4.0 * t);
  if (y > 700.0) return 0.0;  // e^{-y} underflows well before this
  // Q(n+1/2, y) = erfc(sqrt(y)) + e^{-y} sum_{j=1..n} y^{j-1/2}/Gamma(j+1/2)
  double q = std::erfc(std::sqrt(y));
  if (g.n > 0) {
    double gamma_j = std::sqrt(M_PI) / 2.0;  // Gamma(3/2)
    double ypow = std::sqrt(y);              // y^{j-1/2}
    double ey = std::exp(-y);
    for (unsigned j = 1; j <= g.n; ++j) {
      q += ey * ypow / gamma_j;
      gamma_j *= j + 0.5;  // Gamma(j+3/2) = (j+1/2) Gamma(j+1/2)
      ypow *= y;
    }
  }
  return std::min(1.0, std::max(0.0, q));
}

void MixtureSpec::validate() const {
  Rational sum(0);
  for (const auto& c : components) {
    if (c.weight.sign() <= 0) throw std::invalid_argument("MixtureSpec: weights must be positive");
    sum += c.weight;
  }
  if (sum != Rational(1)) throw std::invalid_argument("MixtureSpec: weights must sum to 1");
}

double MixtureSpec::student_cdf_mix(double x) const {
  double f = 0.0;
  for (const auto& c : components) f += c.weight.to_double() * student_cdf({c.k}, x);
  return f;
}

double MixtureSpec::inverse_gamma_cdf_mix(double x) const {
  double f = 0.0;
  for (const auto& c : components) f += c.weight.to_double() * inverse_gamma_cdf({c.k}, x);
  return f;
}

MixtureSpec mixture_from_table(const CoeffTable& table, const Rational& a) {
  MixtureSpec mix;
  Rational sum(0);
  for (size_t k = 0; k < table.entries.size(); ++k) {
    Rational w = table.entries[k].eval(a);
    if (w.sign() < 0)
      throw std::runtime_error("mixture_from_table: negative weight at k=" + std::to_string(k) +
                               " (a=" + a.str() + "), positivity violated");
    if (w.sign() > 0) mix.components.push_back({static_cast<unsigned>(k), w});
    sum += w;
  }
  if (sum != Rational(1))
    throw std::runtime_error("mixture_from_table: weights sum to " + sum.str() + ", expected 1");
  return mix;
}

MixtureSpec d_statistic_table(unsigned f1, unsigned f2, double theta, bool normalized) {
  if (f1 % 2 == 0 || f2 % 2 == 0)
    throw std::invalid_argument("d_statistic_table: degrees of freedom must be odd");
  if (!(theta >= 0.0 && theta <= M_PI_2 + 1e-12))
    throw std::invalid_argument("d_statistic_table: theta outside [0, pi/2]");
  unsigned n = (f1 - 1) / 2, m = (f2 - 1) / 2;
  double s = std::sin(theta);
  double a_num = normalized ? s / (s + std::cos(theta)) : s;
  a_num = std::min(1.0, std::max(0.0, a_num));
  Rational a = Rational::from_double_exact(a_num);
  return mixture_from_table(linearization_general(n, m, LinMode::oracle), a);
}

double Rng::normal() {
  double u1 = uniform_pos();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::gamma(double shape) {
  if (shape < 1.0) {
    double u = uniform_pos();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform_pos();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

namespace {

constexpr std::size_t kSampleBlock = 1 << 16;

/// Fills `out` with one value per sample; block i is generated from an Rng
/// seeded by mix_seed(seed, i), so the result does not depend on how blocks
/// are scheduled across workers.
template <class PerSample>
std::vector<double> sample_blocked(std::size_t count, std::uint64_t seed, PerSample&& per_sample) {
  std::vector<double> out(count);
  std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  parallel_for_index(blocks, [&](std::size_t b) {
    Rng rng(mix_seed(seed, b));
    std::size_t lo = b * kSampleBlock, hi = std::min(count, lo + kSampleBlock);
    for (std::size_t i = lo; i < hi; ++i) out[i] = per_sample(rng);
  });
  return out;
}

KsReport run_ks(const char* kind, unsigned n, unsigned m, const Rational& a,
                std::size_t samples, std::uint64_t seed, std::vector<double> draws,
                const MixtureSpec& mix, bool student) {
  std::sort(draws.begin(), draws.end());
  double d = student ? ks_statistic_sorted(draws, [&](double x) { return mix.student_cdf_mix(x); })
                     : ks_statistic_sorted(draws, [&](double x) { return mix.inverse_gamma_cdf_mix(x); });
  KsReport r;
  r.kind = kind;
  r.n = n;
  r.m = m;
  r.a = a.str();
  r.samples = samples;
  r.seed = seed;
  r.ks_statistic = d;
  r.critical_value = ks_critical_alpha01(samples);
  r.pass = d < r.critical_value;
  return r;
}

}  // namespace

KsReport mc_convolution_check(unsigned n, unsigned m, const Rational& a,
                              std::size_t samples, std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("mc_convolution_check: samples >= 10^4 required");
  MixtureSpec mix = mixture_from_table(linearization_general(n, m, LinMode::oracle), a);
  double ad = a.to_double();
  auto draws = sample_blocked(samples, seed, [&](Rng& rng) {
    return ad * rng.student_t_half(n) + (1.0 - ad) * rng.student_t_half(m);
  });
  return run_ks("student-convolution", n, m, a, samples, seed, std::move(draws), mix, true);
}

KsReport mc_inverse_gamma_check(unsigned n, unsigned m, const Rational& a,
                                std::size_t samples, std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("mc_inverse_gamma_check: samples >= 10^4 required");
  MixtureSpec mix = mixture_from_table(linearization_general(n, m, LinMode::oracle), a);
  double ad = a.to_double();
  double wa = ad * ad, wb = (1.0 - ad) * (1.0 - ad);
  auto draws = sample_blocked(samples, seed, [&](Rng& rng) {
    return wa * rng.inverse_gamma_half(n) + wb * rng.inverse_gamma_half(m);
  });
  return run_ks("inverse-gamma", n, m, a, samples, seed, std::move(draws), mix, false);
}

}  // namespace linz
