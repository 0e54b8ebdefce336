#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "degen/series.hpp"

using degen::PolyLambda;
using degen::Rational;
using degen::TruncatedSeries;

namespace {

struct TestRng {
  std::uint64_t state = 0xBADC0FFEE0DDF00Dull;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  Rational rational() {
    long num = static_cast<long>(next() % 21) - 10;
    long den = 1 + static_cast<long>(next() % 6);
    return Rational(num, den);
  }
  TruncatedSeries series(int order, bool unit_constant) {
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i) s.set_coeff(i, PolyLambda(rational()));
    if (unit_constant) {
      Rational c = rational();
      s.set_coeff(0, PolyLambda(c.is_zero() ? Rational(1) : c));
    }
    return s;
  }
};

TruncatedSeries one_minus_t(int order) {
  TruncatedSeries s(order);
  s.set_coeff(0, PolyLambda(1));
  if (order >= 1) s.set_coeff(1, PolyLambda(-1));
  return s;
}

}  // namespace

TEST_CASE("series add and mul") {
  TruncatedSeries one_plus_t = TruncatedSeries::from_coeffs(2, {PolyLambda(1), PolyLambda(1)});
  TruncatedSeries prod = one_plus_t * one_minus_t(2);
  CHECK(prod.coeff(0) == PolyLambda(1));
  CHECK(prod.coeff(1) == PolyLambda());
  CHECK(prod.coeff(2) == PolyLambda(-1));

  TruncatedSeries geo = degen::geometric(9) * one_minus_t(9);
  for (int i = 0; i <= 9; ++i) CHECK(geo.coeff(i) == (i == 0 ? PolyLambda(1) : PolyLambda()));

  TruncatedSeries tt = degen::t_series(4) * degen::t_series(4);
  CHECK(tt.coeff(2) == PolyLambda(1));
  CHECK(tt.coeff(1) == PolyLambda());
  CHECK(tt.coeff(3) == PolyLambda());

  // result order is the minimum of the operand orders
  CHECK((degen::t_series(7) * degen::t_series(3)).order() == 3);
  CHECK((degen::t_series(7) + degen::t_series(3)).order() == 3);
}

TEST_CASE("series div") {
  TruncatedSeries one = TruncatedSeries::from_coeffs(8, {PolyLambda(1)});
  TruncatedSeries inv = degen::series_div(one, one_minus_t(8));
  for (int i = 0; i <= 8; ++i) CHECK(inv.coeff(i) == PolyLambda(1));

  TestRng rng;
  TruncatedSeries a = rng.series(8, false);
  CHECK(degen::series_div(a, one) == a);

  TruncatedSeries one_minus_t2(8);
  one_minus_t2.set_coeff(0, PolyLambda(1));
  one_minus_t2.set_coeff(2, PolyLambda(-1));
  TruncatedSeries q = degen::series_div(one_minus_t2, one_minus_t(8));
  CHECK(q.coeff(0) == PolyLambda(1));
  CHECK(q.coeff(1) == PolyLambda(1));
  for (int i = 2; i <= 8; ++i) CHECK(q.coeff(i) == PolyLambda());

  // divisor constant term must be a nonzero rational constant
  TruncatedSeries bad(4);
  bad.set_coeff(0, PolyLambda::lambda());
  CHECK_THROWS_AS(degen::series_div(one.truncated(4), bad), std::domain_error);
  TruncatedSeries zero_const(4);
  CHECK_THROWS_AS(degen::series_div(one.truncated(4), zero_const), std::domain_error);

  // (a/b)*b == a whenever the precondition holds
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries x = rng.series(10, false);
    TruncatedSeries b = rng.series(10, true);
    CHECK(degen::series_div(x, b) * b == x);
  }
}

TEST_CASE("series compose") {
  // oracle: [t^n] (t/(1-t))^k = binom(n-1,k-1), so composing the geometric
  // series with t/(1-t) gives sum_k binom(n-1,k-1) at t^n.
  int n_max = 9;
  TruncatedSeries comp = degen::series_compose(degen::geometric(n_max),
                                               degen::t_over_one_minus_t(n_max));
  CHECK(comp.coeff(0) == PolyLambda(1));
  for (int n = 1; n <= n_max; ++n) {
    degen::BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += degen::binomial(n - 1, k - 1);
    CHECK(comp.coeff(n) == PolyLambda(Rational(sum)));
  }

  TestRng rng;
  TruncatedSeries outer = rng.series(8, false);
  CHECK(degen::series_compose(outer, degen::t_series(8)) == outer);

  TruncatedSeries u2(4);
  u2.set_coeff(2, PolyLambda(1));
  TruncatedSeries inner(4);
  inner.set_coeff(1, PolyLambda(1));
  inner.set_coeff(2, PolyLambda(1));
  TruncatedSeries sq = degen::series_compose(u2, inner);
  CHECK(sq.coeff(2) == PolyLambda(1));
  CHECK(sq.coeff(3) == PolyLambda(2));
  CHECK(sq.coeff(4) == PolyLambda(1));
  CHECK(sq.coeff(1) == PolyLambda());

  CHECK_THROWS_AS(degen::series_compose(outer, degen::geometric(8)), std::domain_error);
}

TEST_CASE("series reversion") {
  CHECK(degen::series_reversion(degen::t_series(8)) == degen::t_series(8));

  // reversion(t/(1-t)) = t/(1+t); oracle: algebraic inverse, checked by
  // composition both ways.
  TruncatedSeries f = degen::t_over_one_minus_t(10);
  TruncatedSeries g = degen::series_reversion(f);
  for (int n = 1; n <= 10; ++n)
    CHECK(g.coeff(n) == PolyLambda(Rational(degen::parity_sign(n - 1))));
  CHECK(degen::series_compose(f, g) == degen::t_series(10));
  CHECK(degen::series_compose(g, f) == degen::t_series(10));

  // preconditions
  CHECK_THROWS_AS(degen::series_reversion(degen::geometric(6)), std::domain_error);
  TruncatedSeries no_linear(6);
  no_linear.set_coeff(2, PolyLambda(1));
  CHECK_THROWS_AS(degen::series_reversion(no_linear), std::domain_error);
  TruncatedSeries lambda_linear(6);
  lambda_linear.set_coeff(1, PolyLambda::lambda());
  CHECK_THROWS_AS(degen::series_reversion(lambda_linear), std::domain_error);
}

TEST_CASE("degenerate exponential and logarithm") {
  TruncatedSeries e1 = degen::gf_deg_exp(Rational(1), 6);
  CHECK(e1.coeff(0) == PolyLambda(1));
  // oracle: deg_falling(1,2)/2!
  CHECK(e1.coeff(2) == degen::deg_falling(Rational(1), 2) / Rational(2));
  CHECK(e1.coeff(2) == PolyLambda{Rational(1, 2), Rational(-1, 2)});
  TruncatedSeries em1 = degen::gf_deg_exp(Rational(-1), 6);
  CHECK(em1.coeff(2) == degen::deg_falling(Rational(-1), 2) / Rational(2));
  CHECK(em1.coeff(2) == PolyLambda{Rational(1, 2), Rational(1, 2)});

  TruncatedSeries log = degen::gf_deg_log(8);
  CHECK(log.coeff(0) == PolyLambda());
  CHECK(log.coeff(1) == PolyLambda(1));
  CHECK(log.coeff(2) == PolyLambda{Rational(-1, 2), Rational(1, 2)});  // (λ-1)/2
  // λ->0 limit: coefficients of log(1+t)
  for (int n = 1; n <= 8; ++n)
    CHECK(log.coeff(n).eval(Rational(0)) == Rational(degen::parity_sign(n - 1)) / Rational(n));
}

TEST_CASE("reversion builds the degenerate logarithm") {
  int n = 12;
  TruncatedSeries e1 = degen::gf_deg_exp(Rational(1), n);
  e1.set_coeff(0, PolyLambda());
  CHECK(degen::series_reversion(e1) == degen::gf_deg_log(n));
}

TEST_CASE("round trip of e and log at order 32") {
  const int n = 32;
  TruncatedSeries e1 = degen::gf_deg_exp(Rational(1), n);
  e1.set_coeff(0, PolyLambda());
  TruncatedSeries log = degen::gf_deg_log(n);
  CHECK(degen::series_compose(e1, log) == degen::t_series(n));
  CHECK(degen::series_compose(log, e1) == degen::t_series(n));
}

TEST_CASE("degenerate polylogarithm") {
  TruncatedSeries li1 = degen::gf_polylog(1, 6);
  // oracle: (-1)^{n-1} binom(λ-1,n-1)/n^m literal at m=1, n=2
  CHECK(li1.coeff(2) == degen::binom_lambda_minus_one(1) * Rational(-1, 2));
  CHECK(li1.coeff(2) == PolyLambda{Rational(1, 2), Rational(-1, 2)});
  for (long m : {-2L, -1L, 0L, 1L, 3L}) CHECK(degen::gf_polylog(m, 4).coeff(1) == PolyLambda(1));
  // m=0: (-1) binom(λ-1,1) = 1-λ
  CHECK(degen::gf_polylog(0, 4).coeff(2) == PolyLambda{Rational(1), Rational(-1)});
  // m=1 equals -log_λ(1-t): flip the sign of t in gf_deg_log and negate
  TruncatedSeries log = degen::gf_deg_log(8);
  for (int n = 1; n <= 8; ++n)
    CHECK(degen::gf_polylog(1, 8).coeff(n) ==
          log.coeff(n) * Rational(-degen::parity_sign(n)));
  // λ->0 recovers 1/n^m
  for (long m : {-1L, 0L, 2L})
    for (int n = 1; n <= 8; ++n)
      CHECK(degen::gf_polylog(m, 8).coeff(n).eval(Rational(0)) ==
            degen::pow(Rational(n), -m));
}

TEST_CASE("harmonic-type generating functions") {
  TruncatedSeries h = degen::gf_H(10);
  CHECK(h.coeff(0) == PolyLambda());
  CHECK(h.coeff(1) == PolyLambda(1));
  // oracle: direct defining sum for n=2
  PolyLambda h2 = degen::binom_lambda_minus_one(0) -
                  degen::binom_lambda_minus_one(1) * Rational(1, 2);
  CHECK(h.coeff(2) == h2);
  CHECK(h.coeff(2) == PolyLambda{Rational(3, 2), Rational(-1, 2)});

  // K^{(1)} has the same coefficients as H
  CHECK(degen::gf_K(1, 10) == h);

  // H^{(1)} also reduces to H
  CHECK(degen::gf_H_order(1, 10) == h);

  // telescoping: [t^n] Li_1 = H_n - H_{n-1}
  TruncatedSeries li1 = degen::gf_polylog(1, 10);
  for (int n = 1; n <= 10; ++n)
    CHECK(li1.coeff(n) == h.coeff(n) - h.coeff(n - 1));

  CHECK_THROWS_AS(degen::gf_H_order(0, 4), std::domain_error);
  CHECK_THROWS_AS(degen::gf_K(0, 4), std::domain_error);
}

TEST_CASE("EGF builders") {
  // stirling k=1: [t^2] is -(λ-1)/2, times 2! gives 1-λ
  TruncatedSeries s1 = degen::gf_stirling_unsigned(1, 6);
  CHECK(s1.coeff(2) * Rational(2) == PolyLambda{Rational(1), Rational(-1)});

  // lah k=2: [t^3] (1/2!)(t/(1-t))^2 = 1, times 3! gives 6 = binom(2,1)·3!/2!
  TruncatedSeries l2 = degen::gf_lah(2, 6);
  CHECK(l2.coeff(3) * Rational(degen::factorial(3)) ==
        PolyLambda(Rational(degen::binomial(2, 1) * 3)));

  // derangement: [t^2]·2! = 2!·sum_{k<=2} (-1)_{k,λ}/k!
  PolyLambda expected;
  for (long k = 0; k <= 2; ++k)
    expected += degen::deg_falling(Rational(-1), k) / Rational(degen::factorial(k));
  expected *= Rational(2);
  TruncatedSeries d = degen::gf_deg_derangement(6);
  CHECK(d.coeff(2) * Rational(2) == expected);
  CHECK(d.coeff(2) * Rational(2) == PolyLambda{Rational(1), Rational(1)});
}

TEST_CASE("coefficient list stays zero-padded") {
  TruncatedSeries s(5);
  CHECK(s.order() == 5);
  for (int i = 0; i <= 5; ++i) CHECK(s.coeff(i).is_zero());
  CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
  CHECK_THROWS_AS(TruncatedSeries(-1), std::domain_error);
}
