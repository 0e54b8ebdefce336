#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense univariate polynomial in the formal parameter λ with Rational
/// coefficients.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list. Equality is structural, which the canonical form
/// makes equivalent to ring equality.
class PolyLambda {
 public:
  PolyLambda() = default;
  PolyLambda(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  PolyLambda(long c) : PolyLambda(Rational(c)) {}
  PolyLambda(int c) : PolyLambda(Rational(c)) {}
  PolyLambda(std::initializer_list<Rational> cs) : c_(cs) { trim(); }

  /// The indeterminate λ itself.
  static PolyLambda lambda() { return PolyLambda{Rational(0), Rational(1)}; }

  static PolyLambda from_coeffs(std::vector<Rational> cs) {
    PolyLambda p;
    p.c_ = std::move(cs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of λ^i, zero beyond the stored range.
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  PolyLambda operator-() const {
    PolyLambda r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  PolyLambda& operator+=(const PolyLambda& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PolyLambda& operator-=(const PolyLambda& o) { return *this += -o; }

  friend PolyLambda operator+(PolyLambda a, const PolyLambda& b) { return a += b; }
  friend PolyLambda operator-(PolyLambda a, const PolyLambda& b) { return a -= b; }

  friend PolyLambda operator*(const PolyLambda& a, const PolyLambda& b) {
    PolyLambda r;
    r.add_mul(a, b);
    return r;
  }
  PolyLambda& operator*=(const PolyLambda& o) { return *this = *this * o; }

  /// *this += a*b without materializing the product polynomial.
  void add_mul(const PolyLambda& a, const PolyLambda& b) {
    if (a.is_zero() || b.is_zero()) return;
    size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need) c_.resize(need);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        c_[i + j].add_mul(a.c_[i], b.c_[j]);
      }
    }
    trim();
  }

  PolyLambda& operator*=(const Rational& s) {
    if (s.is_zero()) { c_.clear(); return *this; }
    for (auto& c : c_) c *= s;
    return *this;
  }
  PolyLambda& operator/=(const Rational& s) {
    if (s.is_zero()) throw std::domain_error("PolyLambda: division by zero scalar");
    for (auto& c : c_) c /= s;
    return *this;
  }
  friend PolyLambda operator*(PolyLambda p, const Rational& s) { return p *= s; }
  friend PolyLambda operator*(const Rational& s, PolyLambda p) { return p *= s; }
  friend PolyLambda operator/(PolyLambda p, const Rational& s) { return p /= s; }

  friend bool operator==(const PolyLambda& a, const PolyLambda& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyLambda& a, const PolyLambda& b) { return !(a == b); }

  /// Canonical text rendering: ascending powers joined by " + " / " - ",
  /// coefficients in lowest terms, "λ" for power 1, "λ^k" above.
  /// ascii=true substitutes "L" for "λ" and "*" for "·".
  std::string str(bool ascii = false) const {
    if (c_.empty()) return "0";
    const char* lam = ascii ? "L" : "λ";
    const char* dot = ascii ? "*" : "·";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += (c.sign() < 0) ? " - " : " + ";
      }
      Rational a = abs(c);
      if (i == 0) {
        out += a.str();
      } else {
        if (a != Rational(1)) { out += a.str(); out += dot; }
        out += lam;
        if (i >= 2) { out += "^"; out += std::to_string(i); }
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;  // ascending powers, canonical
};

/// λ -> -λ: flips the sign of every odd-power coefficient. Involution.
inline PolyLambda substitute_neg_lambda(const PolyLambda& p) {
  std::vector<Rational> cs = p.coeffs();
  for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
  return PolyLambda::from_coeffs(std::move(cs));
}

/// Degenerate falling factorial (x)_{n,λ} = x(x-λ)(x-2λ)...(x-(n-1)λ)
/// as a polynomial in λ; (x)_{0,λ} = 1.
inline PolyLambda deg_falling(const Rational& x, long n) {
  if (n < 0) throw std::domain_error("deg_falling: negative n");
  PolyLambda acc{Rational(1)};
  for (long i = 0; i < n; ++i) acc *= PolyLambda{x, Rational(-i)};
  return acc;
}

/// Unit-step falling factorial (p)_n = p(p-1)...(p-n+1).
inline PolyLambda falling_poly(const PolyLambda& p, long n) {
  if (n < 0) throw std::domain_error("falling_poly: negative n");
  PolyLambda acc{Rational(1)};
  for (long i = 0; i < n; ++i) acc *= (p - PolyLambda(Rational(i)));
  return acc;
}

/// Rising factorial <p>_n = p(p+1)...(p+n-1).
inline PolyLambda rising_poly(const PolyLambda& p, long n) {
  if (n < 0) throw std::domain_error("rising_poly: negative n");
  PolyLambda acc{Rational(1)};
  for (long i = 0; i < n; ++i) acc *= (p + PolyLambda(Rational(i)));
  return acc;
}

/// Generalized binomial coefficient with polynomial upper argument:
/// binom(p, k) = (p)_k / k!.
inline PolyLambda binom_poly(const PolyLambda& p, long k) {
  if (k < 0) throw std::domain_error("binom_poly: negative k");
  return falling_poly(p, k) / Rational(factorial(k));
}

/// binom(λ-1, k) — the upper argument used throughout the harmonic family.
inline PolyLambda binom_lambda_minus_one(long k) {
  return binom_poly(PolyLambda{Rational(-1), Rational(1)}, k);
}

/// binom(λ+c, k) for integer c.
inline PolyLambda binom_lambda_plus(long c, long k) {
  return binom_poly(PolyLambda{Rational(c), Rational(1)}, k);
}

inline std::ostream& operator<<(std::ostream& os, const PolyLambda& p) {
  return os << p.str();
}

}  // namespace degen
