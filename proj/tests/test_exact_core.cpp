#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "degen/poly.hpp"
#include "degen/rational.hpp"

using degen::BigInt;
using degen::PolyLambda;
using degen::Rational;

namespace {

struct TestRng {
  std::uint64_t state = 0x1234567890ABCDEFull;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  Rational rational() {
    long num = static_cast<long>(next() % 41) - 20;
    long den = 1 + static_cast<long>(next() % 12);
    return Rational(num, den);
  }
  PolyLambda poly(int max_degree) {
    std::vector<Rational> cs;
    int deg = static_cast<int>(next() % static_cast<std::uint64_t>(max_degree + 1));
    for (int i = 0; i <= deg; ++i) cs.push_back(rational());
    return PolyLambda::from_coeffs(cs);
  }
};

}  // namespace

TEST_CASE("Rational canonical form") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(1, -2).numerator() == -1);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational().is_zero());
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic is exact") {
  TestRng rng;
  for (int i = 0; i < 50; ++i) {
    Rational a = rng.rational();
    Rational b = rng.rational();
    CHECK(a + b - b == a);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational parse and pow") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));

  CHECK(degen::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(degen::pow(Rational(2), -2) == Rational(1, 4));
  CHECK(degen::pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(degen::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorial and binomial") {
  CHECK(degen::factorial(0) == 1);
  CHECK(degen::factorial(5) == 120);
  CHECK(degen::binomial(6, 2) == 15);
  CHECK(degen::binomial(4, 7) == 0);
  CHECK(degen::binomial(4, -1) == 0);
}

TEST_CASE("beta_int") {
  // oracle: (a-1)!(b-1)!/(a+b-1)!
  auto oracle = [](long a, long b) {
    return Rational(degen::factorial(a - 1) * degen::factorial(b - 1),
                    degen::factorial(a + b - 1));
  };
  CHECK(degen::beta_int(1, 1) == Rational(1));
  CHECK(degen::beta_int(2, 1) == oracle(2, 1));
  CHECK(degen::beta_int(2, 1) == Rational(1, 2));
  CHECK(degen::beta_int(2, 3) == oracle(2, 3));
  CHECK(degen::beta_int(2, 3) == Rational(1, 12));
  CHECK_THROWS_AS(degen::beta_int(0, 1), std::domain_error);
  CHECK_THROWS_AS(degen::beta_int(1, -2), std::domain_error);
}

TEST_CASE("alternating sum equals beta at integer arguments") {
  for (long n = 1; n <= 20; ++n) {
    for (long l = 1; l <= n; ++l) {
      Rational sum(0);
      for (long k = 0; k <= n - l; ++k)
        sum += Rational(degen::binomial(n - l, k)) * Rational(degen::parity_sign(k)) /
               Rational(k + l);
      CHECK(sum == degen::beta_int(n - l + 1, l));
    }
  }
}

TEST_CASE("PolyLambda canonical form and eval") {
  CHECK(PolyLambda().is_zero());
  CHECK(PolyLambda(Rational(0)).is_zero());
  CHECK(PolyLambda::from_coeffs({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(PolyLambda::from_coeffs({}).is_zero());
  CHECK(PolyLambda().degree() == -1);

  PolyLambda p{Rational(3, 2), Rational(-1, 2)};
  CHECK(p.eval(Rational(0)) == Rational(3, 2));  // coeffs[0]
  CHECK(PolyLambda().eval(Rational(5)) == Rational(0));
  CHECK(p.eval(Rational(1)) == Rational(1));
  CHECK(p.coeff(7) == Rational(0));
}

TEST_CASE("PolyLambda ring axioms on random samples") {
  TestRng rng;
  for (int i = 0; i < 100; ++i) {
    PolyLambda p = rng.poly(8);
    PolyLambda q = rng.poly(8);
    PolyLambda r = rng.poly(8);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p - p == PolyLambda());
  }
}

TEST_CASE("PolyLambda rendering") {
  CHECK(PolyLambda().str() == "0");
  CHECK(PolyLambda(Rational(3)).str() == "3");
  CHECK(PolyLambda{Rational(3, 2), Rational(-1, 2)}.str() == "3/2 - 1/2·λ");
  CHECK(PolyLambda{Rational(11, 6), Rational(-1), Rational(1, 6)}.str() ==
        "11/6 - λ + 1/6·λ^2");
  CHECK(PolyLambda{Rational(11, 6), Rational(-1), Rational(1, 6)}.str(true) ==
        "11/6 - L + 1/6*L^2");
  CHECK(PolyLambda{Rational(-1, 2), Rational(1)}.str() == "-1/2 + λ");
  CHECK(PolyLambda::lambda().str() == "λ");
}

TEST_CASE("deg_falling") {
  CHECK(degen::deg_falling(Rational(1), 0) == PolyLambda(1));
  CHECK(degen::deg_falling(Rational(1), 2) == PolyLambda{Rational(1), Rational(-1)});
  // oracle: literal product (-1)(-1-λ)
  PolyLambda expected = PolyLambda(Rational(-1)) * PolyLambda{Rational(-1), Rational(-1)};
  CHECK(degen::deg_falling(Rational(-1), 2) == expected);
  CHECK(degen::deg_falling(Rational(-1), 2) == PolyLambda{Rational(1), Rational(1)});

  // degree is exactly n-1 for x != 0, n >= 1
  CHECK(degen::deg_falling(Rational(2, 3), 5).degree() == 4);

  // λ=0 evaluation gives x^n
  for (Rational x : {Rational(2), Rational(-3, 2), Rational(1, 7)})
    for (long n = 0; n <= 32; ++n)
      CHECK(degen::deg_falling(x, n).eval(Rational(0)) == degen::pow(x, n));
}

TEST_CASE("falling, rising, binom_poly") {
  PolyLambda lam_m1{Rational(-1), Rational(1)};  // λ-1
  PolyLambda lam_p1{Rational(1), Rational(1)};   // λ+1

  CHECK(degen::falling_poly(lam_m1, 1) == lam_m1);
  // oracle: (λ-1)(λ-2) expanded by hand = λ²-3λ+2
  CHECK(degen::falling_poly(lam_m1, 2) ==
        PolyLambda{Rational(2), Rational(-3), Rational(1)});
  CHECK(degen::falling_poly(lam_m1, 0) == PolyLambda(1));

  CHECK(degen::rising_poly(lam_p1, 1) == lam_p1);
  // oracle: (λ+1)(λ+2) expanded
  CHECK(degen::rising_poly(lam_p1, 2) == lam_p1 * PolyLambda{Rational(2), Rational(1)});
  CHECK(degen::rising_poly(lam_p1, 0) == PolyLambda(1));

  CHECK(degen::binom_poly(lam_m1, 0) == PolyLambda(1));
  CHECK(degen::binom_poly(lam_m1, 1) == lam_m1);
  // oracle: falling then divide by 2!
  CHECK(degen::binom_poly(lam_p1, 2) == degen::falling_poly(lam_p1, 2) / Rational(2));

  TestRng rng;
  for (int i = 0; i < 20; ++i) {
    PolyLambda p = rng.poly(5);
    long k = static_cast<long>(rng.next() % 7);
    CHECK(degen::binom_poly(p, k) * Rational(degen::factorial(k)) == degen::falling_poly(p, k));
  }
}

TEST_CASE("substitute_neg_lambda") {
  CHECK(degen::substitute_neg_lambda(PolyLambda{Rational(1), Rational(-1)}) ==
        PolyLambda{Rational(1), Rational(1)});
  CHECK(degen::substitute_neg_lambda(PolyLambda(3)) == PolyLambda(3));
  CHECK(degen::substitute_neg_lambda(PolyLambda{Rational(2), Rational(-3), Rational(1)}) ==
        PolyLambda{Rational(2), Rational(3), Rational(1)});

  TestRng rng;
  for (int i = 0; i < 50; ++i) {
    PolyLambda p = rng.poly(8);
    CHECK(degen::substitute_neg_lambda(degen::substitute_neg_lambda(p)) == p);
  }
}
