#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/poly.hpp"

namespace degen {

/// Formal power series in t truncated at order N, coefficients in Q[λ].
///
/// The coefficient list always has length order+1 (zero-padded). Arithmetic
/// results carry the minimum order of the operands; all coefficient
/// computations are exact.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : order_(check_order(order)), c_(order + 1) {}

  static TruncatedSeries from_coeffs(int order, std::vector<PolyLambda> cs) {
    TruncatedSeries s(order);
    cs.resize(static_cast<size_t>(order) + 1);
    s.c_ = std::move(cs);
    return s;
  }

  int order() const { return order_; }

  const PolyLambda& coeff(int n) const {
    if (n < 0 || n > order_)
      throw std::out_of_range("TruncatedSeries::coeff: index beyond order");
    return c_[static_cast<size_t>(n)];
  }

  void set_coeff(int n, PolyLambda p) {
    if (n < 0 || n > order_)
      throw std::out_of_range("TruncatedSeries::set_coeff: index beyond order");
    c_[static_cast<size_t>(n)] = std::move(p);
  }

  /// Copy truncated or zero-extended to a new order.
  TruncatedSeries truncated(int new_order) const {
    TruncatedSeries s(new_order);
    int m = std::min(order_, new_order);
    for (int i = 0; i <= m; ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return s;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
  }

  /// Exact Cauchy product up to the minimum order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
    }
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend TruncatedSeries operator*(TruncatedSeries s, const Rational& k) {
    for (auto& p : s.c_) p *= k;
    return s;
  }
  friend TruncatedSeries operator*(const Rational& k, TruncatedSeries s) { return std::move(s) * k; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
    return order;
  }

  int order_;
  std::vector<PolyLambda> c_;  // size order_+1
};

/// Quotient c with c*b = a up to the common order. The constant term of b
/// must be a unit in Q[λ], i.e. a nonzero rational constant.
inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  const PolyLambda& b0 = b.coeff(0);
  if (b0.degree() != 0)
    throw std::domain_error("series_div: constant term of divisor is not a nonzero rational");
  Rational inv = Rational(1) / b0.coeff(0);
  int n = std::min(a.order(), b.order());
  TruncatedSeries c(n);
  for (int i = 0; i <= n; ++i) {
    PolyLambda acc = a.coeff(i);
    for (int k = 1; k <= i; ++k) {
      if (b.coeff(k).is_zero()) continue;
      acc -= b.coeff(k) * c.coeff(i - k);
    }
    c.set_coeff(i, acc * inv);
  }
  return c;
}

/// outer(inner(t)) truncated to the minimum order. inner must have zero
/// constant term; evaluation is Horner with eager truncation at each step.
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (!inner.coeff(0).is_zero())
    throw std::domain_error("series_compose: inner series has nonzero constant term");
  int n = std::min(outer.order(), inner.order());
  TruncatedSeries in = inner.truncated(n);
  TruncatedSeries acc(n);
  acc.set_coeff(0, outer.coeff(n));
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in;
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
  }
  return acc;
}

/// The series t at a given order.
inline TruncatedSeries t_series(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.set_coeff(1, PolyLambda(1));
  return s;
}

/// Termwise formal derivative, zero-padded back to the input order.
inline TruncatedSeries series_derivative(const TruncatedSeries& f) {
  TruncatedSeries d(f.order());
  for (int i = 1; i <= f.order(); ++i) d.set_coeff(i - 1, f.coeff(i) * Rational(i));
  return d;
}

/// Compositional inverse: g with f(g(t)) = t and g(f(t)) = t to the working
/// order. Requires f(0) = 0 and [t^1]f a nonzero rational constant.
/// Newton iteration with doubling precision; the result is verified exactly
/// before returning.
inline TruncatedSeries series_reversion(const TruncatedSeries& f) {
  if (!f.coeff(0).is_zero())
    throw std::domain_error("series_reversion: nonzero constant term");
  if (f.order() < 1 || f.coeff(1).degree() != 0)
    throw std::domain_error("series_reversion: [t^1] must be a nonzero rational constant");
  const int n = f.order();
  Rational c1 = f.coeff(1).coeff(0);

  TruncatedSeries g(n);
  g.set_coeff(1, PolyLambda(Rational(1) / c1));
  TruncatedSeries fp = series_derivative(f);

  int correct = 1;
  int guard = 0;
  while (correct < n) {
    int m = std::min(2 * correct, n);
    TruncatedSeries gm = g.truncated(m);
    TruncatedSeries num = series_compose(f.truncated(m), gm) - t_series(m);
    TruncatedSeries den = series_compose(fp.truncated(m), gm);
    g = (gm - series_div(num, den)).truncated(n);
    correct = m;
    if (++guard > 64) throw std::logic_error("series_reversion: no convergence");
  }
  if (series_compose(f, g) != t_series(n))
    throw std::logic_error("series_reversion: verification failed");
  return g;
}

/// Nonnegative integer power by repeated multiplication.
inline TruncatedSeries series_pow(const TruncatedSeries& s, long k) {
  if (k < 0) throw std::domain_error("series_pow: negative exponent");
  TruncatedSeries acc(s.order());
  acc.set_coeff(0, PolyLambda(1));
  for (long i = 0; i < k; ++i) acc *= s;
  return acc;
}

/// Applies λ -> -λ to every coefficient.
inline TruncatedSeries series_subst_neg_lambda(const TruncatedSeries& s) {
  TruncatedSeries r(s.order());
  for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, substitute_neg_lambda(s.coeff(i)));
  return r;
}

// ---------------------------------------------------------------------------
// Generating-function builders.
// Harmonic-type series are ordinary generating functions; the Stirling, Lah
// and derangement builders are exponential (coefficient of t^n carries 1/n!).
// ---------------------------------------------------------------------------

/// 1/(1-t): all coefficients 1.
inline TruncatedSeries geometric(int order) {
  TruncatedSeries s(order);
  for (int i = 0; i <= order; ++i) s.set_coeff(i, PolyLambda(1));
  return s;
}

/// t/(1-t): coefficients 0, 1, 1, 1, ...
inline TruncatedSeries t_over_one_minus_t(int order) {
  TruncatedSeries s(order);
  for (int i = 1; i <= order; ++i) s.set_coeff(i, PolyLambda(1));
  return s;
}

/// Degenerate exponential e_λ^x(t): coefficient of t^k is (x)_{k,λ}/k!.
inline TruncatedSeries gf_deg_exp(const Rational& x, int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= order; ++k)
    s.set_coeff(k, deg_falling(x, k) / Rational(factorial(k)));
  return s;
}

/// Degenerate logarithm log_λ(1+t): coefficient of t^n is binom(λ-1,n-1)/n.
/// Equal to series_reversion(gf_deg_exp(1,N) - 1); the identity suites check
/// the two constructions against each other.
inline TruncatedSeries gf_deg_log(int order) {
  TruncatedSeries s(order);
  for (int n = 1; n <= order; ++n)
    s.set_coeff(n, binom_lambda_minus_one(n - 1) / Rational(n));
  return s;
}

/// Degenerate polylogarithm Li_{m,λ}(t): coefficient of t^n is
/// (-1)^{n-1} binom(λ-1,n-1)/n^m. m may be any integer, including m <= 0.
inline TruncatedSeries gf_polylog(long m, int order) {
  TruncatedSeries s(order);
  for (int n = 1; n <= order; ++n) {
    Rational w = Rational(parity_sign(n - 1)) * pow(Rational(n), -m);
    s.set_coeff(n, binom_lambda_minus_one(n - 1) * w);
  }
  return s;
}

/// OGF of the degenerate harmonic numbers:
/// 1/(1-t) · log_{-λ}(1 + t/(1-t)).
inline TruncatedSeries gf_H(int order) {
  TruncatedSeries log_neg = series_subst_neg_lambda(gf_deg_log(order));
  return geometric(order) * series_compose(log_neg, t_over_one_minus_t(order));
}

/// OGF of the degenerate harmonic numbers of order m:
/// 1/(1-t) · Li_{m,λ}(t).
inline TruncatedSeries gf_H_order(long m, int order) {
  if (m < 1) throw std::domain_error("gf_H_order: m must be >= 1");
  return geometric(order) * gf_polylog(m, order);
}

/// OGF of K^{(m)}: -1/(1-t) · Li_{m,-λ}(-t/(1-t)). K^{(1)} coincides with
/// the degenerate harmonic numbers.
inline TruncatedSeries gf_K(long m, int order) {
  if (m < 1) throw std::domain_error("gf_K: m must be >= 1");
  TruncatedSeries li_neg = series_subst_neg_lambda(gf_polylog(m, order));
  TruncatedSeries inner = -t_over_one_minus_t(order);
  return -(geometric(order) * series_compose(li_neg, inner));
}

/// EGF of the unsigned degenerate Stirling numbers of the first kind:
/// (1/k!) (-log_λ(1-t))^k; n-th coefficient times n! is [n,k]_λ.
inline TruncatedSeries gf_stirling_unsigned(long k, int order) {
  if (k < 0) throw std::domain_error("gf_stirling_unsigned: negative k");
  // -log_λ(1-t) has coefficients (-1)^{n-1} binom(λ-1,n-1)/n, i.e. Li_{1,λ}.
  return series_pow(gf_polylog(1, order), k) * (Rational(1) / Rational(factorial(k)));
}

/// EGF of the unsigned Lah numbers: (1/k!) (t/(1-t))^k.
inline TruncatedSeries gf_lah(long k, int order) {
  if (k < 0) throw std::domain_error("gf_lah: negative k");
  return series_pow(t_over_one_minus_t(order), k) * (Rational(1) / Rational(factorial(k)));
}

/// EGF of the degenerate derangement numbers: 1/(1-t) · e_λ^{-1}(t).
inline TruncatedSeries gf_deg_derangement(int order) {
  return geometric(order) * gf_deg_exp(Rational(-1), order);
}

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (int i = 0; i <= s.order(); ++i) {
    if (i) os << "; ";
    os << s.coeff(i);
  }
  return os << "]";
}

}  // namespace degen
