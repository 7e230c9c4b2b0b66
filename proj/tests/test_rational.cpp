#include <linz/rational.hpp>

#include <doctest.h>

#include <random>

using namespace linz;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(5, 7) / Rational(5, 14) == Rational(2));
  CHECK_THROWS_AS(Rational(5, 7) / Rational(0), std::domain_error);
  Rational x(5, 7);
  CHECK_THROWS_AS(x /= Rational(0), std::domain_error);
}

TEST_CASE("rational normalization invariants") {
  // denominator > 0, gcd(num, den) = 1, zero is 0/1
  Rational neg(1, -2);
  CHECK(neg.denominator() == 2);
  CHECK(neg.numerator() == -1);
  CHECK(neg.str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(0).denominator() == 1);
  CHECK((Rational(1, 2) - Rational(1, 2)).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string parse and canonical format") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("+7/3").str() == "7/3");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);

  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    Rational r(static_cast<long>(gen() % 2001) - 1000, static_cast<long>(gen() % 999) + 1);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rational ordering and doubles") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational::from_double_exact(0.5) == Rational(1, 2));
  CHECK(Rational::from_double_exact(0.1).to_double() == 0.1);  // exact dyadic round trip
  CHECK(Rational(3, 2).sign() == 1);
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK(Rational(0).is_zero());
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, 1) == 4);  // C(2n, k) at n=2, k=1
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("pochhammer values") {
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(123, 7), 0) == Rational(1));
  CHECK(pochhammer(Rational(-5, 2), 2) == Rational(15, 4));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
}

TEST_CASE("pochhammer reflection identity (a)_n = (-1)^n (1-a-n)_n") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a(static_cast<long>(gen() % 41) - 20, static_cast<long>(gen() % 9) + 1);
    unsigned n = static_cast<unsigned>(gen() % 21);
    Rational lhs = pochhammer(a, n);
    Rational rhs = pochhammer(Rational(1) - a - Rational(static_cast<long>(n)), n);
    if (n % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}
