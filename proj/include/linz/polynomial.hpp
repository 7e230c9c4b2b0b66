#pragma once

#include <linz/rational.hpp>

#include <initializer_list>
#include <sstream>
#include <vector>

namespace linz {

/// Dense univariate polynomial over Rational. The VarTag parameter makes
/// polynomials in different variables distinct types, so a polynomial in u
/// cannot be mixed into a polynomial in a by accident.
///
/// Representation: coeffs()[i] is the coefficient of x^i; the highest stored
/// coefficient is nonzero, and the zero polynomial stores nothing
/// (degree() == -1). Equality is structural equality.
template <class VarTag>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> cs) : c_(cs) { normalize(); }
  explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { normalize(); }

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly variable() { return Poly({Rational(0), Rational(1)}); }
  static Poly monomial(unsigned deg, const Rational& c = Rational(1)) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& p, const Rational& s) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) { return *this = *this * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  double eval_double(double x) const {
    double r = 0.0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
  }

  /// p(s*x): coefficient at x^k picks up a factor s^k.
  Poly scale_arg(const Rational& s) const {
    std::vector<Rational> v = c_;
    Rational sk(1);
    for (size_t k = 1; k < v.size(); ++k) {
      sk *= s;
      v[k] *= sk;
    }
    return Poly(std::move(v));
  }

  /// p(c0 + c1*x), expanded exactly (Horner against the linear polynomial).
  Poly compose_affine(const Rational& c0, const Rational& c1) const {
    Poly lin({c0, c1});
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
  }

  /// Coefficients low-to-high as canonical rational strings.
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    if (out.empty()) out.push_back("0");
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    auto cs = coeff_strings();
    for (size_t i = 0; i < cs.size(); ++i) os << (i ? " " : "") << cs[i];
    os << "]";
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

template <class VarTag>
Poly<VarTag> pow_poly(const Poly<VarTag>& p, unsigned e) {
  Poly<VarTag> r = Poly<VarTag>::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

struct UVarTag {};
struct AVarTag {};

/// Polynomials in u (the Bessel-polynomial argument).
using UPoly = Poly<UVarTag>;
/// Polynomials in the mixing parameter a.
using APoly = Poly<AVarTag>;

}  // namespace linz
