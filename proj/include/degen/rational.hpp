#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace degen {

/// Arbitrary-precision integer; the library never uses fixed-width integers
/// for combinatorial values.
using BigInt = mpz_class;

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Integer binomial coefficient, zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Exact rational number.
///
/// Invariants: always in lowest terms, denominator > 0, zero is 0/1.
/// Backed by GMP's mpq; construction canonicalizes, after which every
/// arithmetic result stays canonical.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p" or "p/q" (decimal, optional leading '-').
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }

  /// *this += a*b, letting the backend fuse the temporary.
  void add_mul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }

  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;  // canonical
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// b^e for any integer e; 0^negative is an error.
inline Rational pow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  if (b.is_zero()) {
    if (e < 0) throw std::domain_error("pow: zero base, negative exponent");
    return Rational(0);
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), b.numerator().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), b.denominator().get_mpz_t(), a);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

/// B(a,b) = (a-1)!(b-1)!/(a+b-1)! for positive integer arguments.
inline Rational beta_int(long a, long b) {
  if (a < 1 || b < 1) throw std::domain_error("beta_int: arguments must be positive");
  return Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace degen
