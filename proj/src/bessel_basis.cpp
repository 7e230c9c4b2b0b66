#include <linz/bessel_basis.hpp>

#include <stdexcept>

namespace linz {

Rational alpha_coeff(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("alpha_coeff: k > n");
  BigInt num = factorial(n) * factorial(2 * n - k) * pow2(k);
  BigInt den = factorial(2 * n) * factorial(n - k) * factorial(k);
  return Rational(num, den);
}

UPoly q_poly(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = alpha_coeff(n, k);
  return UPoly(std::move(c));
}

UPoly q_rec(unsigned n, const UPoly& q_n, const UPoly& q_prev) {
  if (n < 1) throw std::invalid_argument("q_rec: recursion requires n >= 1");
  Rational w(1, static_cast<long>(4 * n * n - 1));
  return q_n + UPoly::monomial(2, w) * q_prev;
}

bool q_derivative_identity_holds(unsigned n) {
  if (n < 1) throw std::invalid_argument("q_derivative_identity_holds: n >= 1");
  UPoly lhs = q_poly(n).derivative();
  UPoly rhs = q_poly(n) - UPoly::monomial(1, Rational(1, static_cast<long>(2 * n - 1))) * q_poly(n - 1);
  return lhs == rhs;
}

Rational carlitz_delta(unsigned n, unsigned i) {
  if (i > n) throw std::out_of_range("carlitz_delta: i > n");
  if (2 * i + 1 < n) return Rational(0);  // the i < (n-1)/2 branch
  BigInt num = factorial(n + 1) * factorial(2 * i);
  BigInt den = pow2(n) * factorial(n - i) * factorial(i) * factorial(2 * i + 1 - n);
  Rational r(num, den);
  return ((n - i) % 2 == 0) ? r : -r;
}

UPoly BesselExpansion::reconstruct() const {
  UPoly p;
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) p += q_poly(static_cast<unsigned>(k)) * coeffs[k];
  return p;
}

BesselExpansion monomial_to_bessel(unsigned n) {
  BesselExpansion e;
  e.coeffs.resize(n + 1);
  for (unsigned i = 0; i <= n; ++i) e.coeffs[i] = carlitz_delta(n, i);
  return e;
}

BesselExpansion poly_to_bessel(const UPoly& p) {
  BesselExpansion e;
  int d = p.degree();
  if (d < 0) return e;
  std::vector<Rational> rem = p.coeffs();
  e.coeffs.resize(d + 1);
  for (int k = d; k >= 0; --k) {
    // rem has degree <= k here; q_k carries the only u^k contribution.
    Rational lead = rem[k] / alpha_coeff(k, k);
    e.coeffs[k] = lead;
    if (lead.is_zero()) continue;
    UPoly qk = q_poly(k);
    for (int j = 0; j <= k; ++j) rem[j] -= lead * qk.coeff(j);
  }
  return e;
}

Rational gamma_coeff(unsigned n, unsigned k, unsigned i) {
  if (k > n) throw std::out_of_range("gamma_coeff: k > n");
  if (i > k) throw std::out_of_range("gamma_coeff: i > k");
  Rational r(pow2(2 * k));
  r *= Rational(binomial(k, i));
  r *= pochhammer(Rational(2 * static_cast<long>(n - k) + 1, 2), k + i);   // (n-k+1/2)_{k+i}
  r *= pochhammer(Rational(-(2 * static_cast<long>(n) + 1), 2), k - i);    // (-n-1/2)_{k-i}
  return r;
}

bool gamma_expansion_identity_holds(unsigned n, unsigned k) {
  UPoly lhs = UPoly::monomial(2 * k) * q_poly(n - k);
  UPoly rhs;
  for (unsigned i = 0; i <= k; ++i) rhs += q_poly(n + i) * gamma_coeff(n, k, i);
  return lhs == rhs;
}

bool half_integer_bessel_recursion_check(unsigned n, unsigned j) {
  if (j > n) throw std::invalid_argument("half_integer_bessel_recursion_check: j > n");
  // nu = n + 1/2. Gamma(z+d)/Gamma(z) = (z)_d keeps everything rational.
  UPoly lhs = UPoly::monomial(2 * j) * q_poly(n - j);
  UPoly rhs;
  for (unsigned i = 0; i <= j; ++i) {
    Rational ratio1 = pochhammer(Rational(2 * static_cast<long>(n) + 3 - 2 * static_cast<long>(j - i), 2), j - i);
    Rational ratio2 = pochhammer(Rational(2 * (static_cast<long>(n) - static_cast<long>(j)) + 1, 2), j + i);
    Rational c = Rational(pow2(2 * j)) * Rational(binomial(j, i)) * ratio1 * ratio2;
    if ((j - i) % 2 == 1) c = -c;
    rhs += q_poly(n + i) * c;
  }
  return lhs == rhs;
}

}  // namespace linz
