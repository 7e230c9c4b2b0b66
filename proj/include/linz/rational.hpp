#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linz {

using BigInt = mpz_class;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Thin value wrapper around GMP's mpq_class so the rest of the
/// library never touches GMP directly. Immutable-by-convention: operations
/// return new values.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(unsigned n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p/q" or "p" with an optional leading sign. Strict: digits only,
  /// no whitespace. Throws std::invalid_argument on malformed input and
  /// std::domain_error on a zero denominator.
  static Rational parse(std::string_view s);

  /// Exact conversion; every finite double is a dyadic rational.
  static Rational from_double_exact(double d) {
    Rational r;
    mpq_set_d(r.v_.get_mpq_t(), d);
    return r;
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Canonical string: "num/den", or just "num" when den == 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return raw(mpq_class(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return raw(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return raw(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return raw(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return raw(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  static Rational raw(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational Rational::parse(std::string_view s) {
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    neg = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  BigInt n(std::string(num), 10), d(std::string(den), 10);
  if (neg) n = -n;
  return Rational(n, d);
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k); zero when k is out of [0, n].
inline BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline BigInt pow2(unsigned long e) { return BigInt(1) << e; }

inline Rational pow_rational(const Rational& base, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return Rational(n, d);  // gcd(a,b)=1 implies gcd(a^e,b^e)=1
}

/// Rising factorial (z)_n = z(z+1)...(z+n-1); (z)_0 = 1.
inline Rational pochhammer(const Rational& z, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= z + Rational(static_cast<long>(i));
  return r;
}

}  // namespace linz
