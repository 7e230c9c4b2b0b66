#include <linz/stochastic.hpp>

#include <linz/util.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace linz;

namespace {

// Composite Simpson on [lo, hi]; intervals must be even.
template <class F>
double simpson(F&& f, double lo, double hi, int intervals) {
  double h = (hi - lo) / intervals;
  double s = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("student density values") {
  CHECK(student_density({0}, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
  CHECK(student_density({1}, 0.0) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  for (unsigned n : {0u, 1u, 4u})
    for (double x : {0.3, 1.0, 2.7, 15.0})
      CHECK(student_density({n}, x) == student_density({n}, -x));
}

TEST_CASE("student density integrates to one") {
  // substitute x = tan(phi): the integrand becomes A_nu cos^{2n}(phi), smooth
  for (unsigned n : {0u, 1u, 2u, 5u}) {
    auto g = [n](double phi) {
      double t = std::tan(phi);
      return student_density({n}, t) * (1.0 + t * t);  // f(tan) sec^2
    };
    // at phi = +-M_PI_2 the product f(tan)(1+tan^2) = A cos^{2n} stays finite
    double total = simpson(g, -M_PI_2, M_PI_2, 200000);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("student cdf closed form") {
  CHECK(student_cdf({0}, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(student_cdf({0}, 1.0) == doctest::Approx(0.75).epsilon(1e-14));  // Cauchy
  double f = student_cdf({5}, 10.0);
  CHECK(f > 0.999);
  CHECK(f < 1.0);
  // numeric integration oracle for the same value
  double tail = 0.5 + simpson([](double x) { return student_density({5}, x); }, 0.0, 10.0, 200000);
  CHECK(f == doctest::Approx(tail).epsilon(1e-11));
}

TEST_CASE("student cdf is monotone with correct limits") {
  for (unsigned n : {0u, 1u, 3u, 7u}) {
    double prev = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      double x = -50.0 + i * 0.01;
      double f = student_cdf({n}, x);
      REQUIRE(f >= prev);
      prev = f;
    }
    CHECK(student_cdf({n}, -1e9) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(student_cdf({n}, 1e9) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("student cdf derivative matches the density") {
  const double h = 1e-5;
  for (unsigned n : {0u, 1u, 3u}) {
    for (double x = -5.0; x <= 5.0; x += 0.25) {
      double num = (student_cdf({n}, x + h) - student_cdf({n}, x - h)) / (2.0 * h);
      CHECK(num == doctest::Approx(student_density({n}, x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("characteristic function kernel") {
  CHECK(char_function_k(0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(char_function_k(2, 2.0) == doctest::Approx((13.0 / 3.0) * std::exp(-2.0)).epsilon(1e-14));
  for (unsigned n : {0u, 1u, 5u, 9u}) {
    CHECK(char_function_k(n, 0.0) == 1.0);
    for (double y = -10.0; y <= 10.0; y += 0.5) {
      double k = char_function_k(n, y);
      CHECK(k > 0.0);
      CHECK(k <= 1.0);
      CHECK(k == char_function_k(n, -y));
    }
  }
}

TEST_CASE("inverse gamma density and cdf") {
  for (unsigned n : {0u, 1u, 3u}) {
    // integrate over t = e^y; decays double-exponentially left, e^{-nu y} right
    auto g = [n](double y) {
      double t = std::exp(y);
      return inverse_gamma_density({n}, t) * t;
    };
    CHECK(simpson(g, -40.0, 80.0, 400000) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK(inverse_gamma_cdf({n}, 0.0) == 0.0);
    CHECK(inverse_gamma_cdf({n}, -1.0) == 0.0);
    // nu = 1/2 has a t^{-1/2} tail: even at 1e12 about 5.6e-7 of mass remains
    CHECK(inverse_gamma_cdf({n}, 1e12) == doctest::Approx(1.0).epsilon(2e-6));
    CHECK(inverse_gamma_cdf({n}, 1e30) == doctest::Approx(1.0).epsilon(1e-12));
    double prev = 0.0;
    for (int i = 1; i <= 2000; ++i) {
      double f = inverse_gamma_cdf({n}, i * 0.01);
      REQUIRE(f >= prev);
      prev = f;
    }
    // derivative check against the density
    const double h = 1e-6;
    for (double t : {0.05, 0.3, 1.0, 4.0}) {
      double num = (inverse_gamma_cdf({n}, t + h) - inverse_gamma_cdf({n}, t - h)) / (2.0 * h);
      CHECK(num == doctest::Approx(inverse_gamma_density({n}, t)).epsilon(1e-6));
    }
  }
}

TEST_CASE("mixture validation") {
  MixtureSpec good{{{0, Rational(1, 4)}, {2, Rational(3, 4)}}};
  CHECK_NOTHROW(good.validate());
  MixtureSpec bad_sum{{{0, Rational(1, 4)}, {2, Rational(1, 4)}}};
  CHECK_THROWS_AS(bad_sum.validate(), std::invalid_argument);
  MixtureSpec negative{{{0, Rational(5, 4)}, {2, Rational(-1, 4)}}};
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("mixture from table") {
  MixtureSpec mix = mixture_from_table(linearization_general(1, 1, LinMode::oracle), Rational(1, 2));
  REQUIRE(mix.components.size() == 2);
  CHECK(mix.components[0].k == 1);
  CHECK(mix.components[0].weight == Rational(1, 4));
  CHECK(mix.components[1].k == 2);
  CHECK(mix.components[1].weight == Rational(3, 4));

  // m=0: weights are the connection coefficients
  MixtureSpec conn = mixture_from_table(linearization_general(2, 0, LinMode::oracle), Rational(1, 3));
  Rational sum(0);
  for (const auto& c : conn.components) sum += c.weight;
  CHECK(sum == Rational(1));
  CHECK(conn.components.front().k == 0);

  // a=1: point mass at k=n
  MixtureSpec point = mixture_from_table(linearization_general(3, 1, LinMode::oracle), Rational(1));
  REQUIRE(point.components.size() == 1);
  CHECK(point.components[0].k == 3);
  CHECK(point.components[0].weight == Rational(1));

  // a negative entry anywhere must abort
  CoeffTable fake;
  fake.symbolic = false;
  fake.entries = {APoly::constant(Rational(5, 4)), APoly::constant(Rational(-1, 4))};
  CHECK_THROWS_AS(mixture_from_table(fake, Rational(1, 2)), std::runtime_error);
}

TEST_CASE("d statistic mixture") {
  // theta = pi/2: a = 1, point mass at f1
  MixtureSpec hi = d_statistic_table(3, 5, M_PI_2);
  REQUIRE(hi.components.size() == 1);
  CHECK(hi.components[0].k == 1);
  // theta = 0: point mass at f2
  MixtureSpec lo = d_statistic_table(3, 1, 0.0);
  REQUIRE(lo.components.size() == 1);
  CHECK(lo.components[0].k == 0);

  // f1 = f2 = 3, theta = pi/4: weights are beta at a = sin(pi/4) to 1e-12
  MixtureSpec mid = d_statistic_table(3, 3, M_PI_4);
  double s = std::sin(M_PI_4);
  REQUIRE(mid.components.size() == 2);
  CHECK(mid.components[0].weight.to_double() ==
        doctest::Approx(1.0 - 3.0 * s * (1.0 - s)).epsilon(1e-12));
  CHECK(mid.components[1].weight.to_double() ==
        doctest::Approx(3.0 * s * (1.0 - s)).epsilon(1e-12));
  Rational sum(0);
  for (const auto& c : mid.components) sum += c.weight;
  CHECK(sum == Rational(1));  // exact even at the dyadic approximation of sin

  // the rescaled statistic has convex coefficients: at pi/4 they are 1/4, 3/4
  MixtureSpec norm = d_statistic_table(3, 3, M_PI_4, true);
  CHECK(norm.components[0].weight.to_double() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(norm.components[1].weight.to_double() == doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(d_statistic_table(4, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(d_statistic_table(3, 3, 2.0), std::invalid_argument);
}

TEST_CASE("rng determinism") {
  Rng a(123), b(123), c(124);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    double x = a.uniform(), y = b.uniform(), z = c.uniform();
    all_equal = all_equal && (x == y);
    any_diff = any_diff || (x != z);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(all_equal);
  CHECK(any_diff);
  CHECK(mix_seed(42, 0) != mix_seed(42, 1));
  CHECK(mix_seed(42, 0) == mix_seed(42, 0));
}

TEST_CASE("gamma sampler moments") {
  Rng rng(2024);
  for (double shape : {0.5, 1.5, 4.0}) {
    double sum = 0.0, n = 200000;
    for (int i = 0; i < n; ++i) sum += rng.gamma(shape);
    CHECK(sum / n == doctest::Approx(shape).epsilon(0.02));
  }
}

TEST_CASE("subordination sampler matches the closed-form cdf") {
  // X = sqrt(2T) Z with T ~ InvGamma(n+1/2, 1/4) must follow the Student-t
  // law; KS at alpha=0.01, majority of 3 seeds.
  for (unsigned n : {0u, 2u}) {
    unsigned passes = 0;
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
      Rng rng(seed);
      std::vector<double> xs(50000);
      for (auto& x : xs) x = rng.student_t_half(n);
      std::sort(xs.begin(), xs.end());
      double d = ks_statistic_sorted(xs, [n](double x) { return student_cdf({n}, x); });
      if (d < ks_critical_alpha01(xs.size())) ++passes;
    }
    CHECK(passes >= 2);
  }
  // and the inverse-gamma draw against its cdf
  unsigned passes = 0;
  for (std::uint64_t seed : {44ull, 55ull, 66ull}) {
    Rng rng(seed);
    std::vector<double> xs(50000);
    for (auto& x : xs) x = rng.inverse_gamma_half(1);
    std::sort(xs.begin(), xs.end());
    double d = ks_statistic_sorted(xs, [](double x) { return inverse_gamma_cdf({1}, x); });
    if (d < ks_critical_alpha01(xs.size())) ++passes;
  }
  CHECK(passes >= 2);
}

TEST_CASE("ks statistic sanity") {
  // uniform samples against the uniform cdf pass; against a wrong cdf fail
  Rng rng(314);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = rng.uniform();
  std::sort(xs.begin(), xs.end());
  double d_good = ks_statistic_sorted(xs, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(d_good < ks_critical_alpha01(xs.size()));
  double d_bad = ks_statistic_sorted(xs, [](double x) { return std::clamp(x * x, 0.0, 1.0); });
  CHECK(d_bad > 10.0 * ks_critical_alpha01(xs.size()));
}

TEST_CASE("monte carlo convolution check") {
  CHECK_THROWS_AS(mc_convolution_check(1, 1, Rational(1, 2), 100, 1), std::invalid_argument);

  // Cauchy case: any a gives back a Cauchy
  KsReport cauchy = mc_convolution_check(0, 0, Rational(1, 4), 20000, 7);
  CHECK(cauchy.pass);
  // a=0: the first factor drops out
  KsReport edge = mc_convolution_check(1, 2, Rational(0), 20000, 8);
  CHECK(edge.pass);
  // reproducibility is bitwise
  KsReport r1 = mc_convolution_check(1, 1, Rational(1, 2), 20000, 42);
  KsReport r2 = mc_convolution_check(1, 1, Rational(1, 2), 20000, 42);
  CHECK(r1.ks_statistic == r2.ks_statistic);
  CHECK(r1.critical_value == ks_critical_alpha01(20000));
}

TEST_CASE("monte carlo inverse gamma check") {
  KsReport point = mc_inverse_gamma_check(2, 1, Rational(1), 20000, 9);
  CHECK(point.pass);  // a=1: plain inverse-Gamma against itself
  KsReport r1 = mc_inverse_gamma_check(2, 1, Rational(1, 3), 20000, 10);
  KsReport r2 = mc_inverse_gamma_check(2, 1, Rational(1, 3), 20000, 10);
  CHECK(r1.ks_statistic == r2.ks_statistic);
}

TEST_CASE("block seeding makes results independent of worker count") {
  // same check with 1 and 4 workers must agree bitwise
  setenv("BESSEL_LINZ_THREADS", "1", 1);
  KsReport one = mc_convolution_check(1, 1, Rational(1, 2), 200000, 99);
  setenv("BESSEL_LINZ_THREADS", "4", 1);
  KsReport four = mc_convolution_check(1, 1, Rational(1, 2), 200000, 99);
  unsetenv("BESSEL_LINZ_THREADS");
  CHECK(one.ks_statistic == four.ks_statistic);
}
