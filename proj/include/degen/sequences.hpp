#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/poly.hpp"
#include "degen/series.hpp"

namespace degen {

// ---------------------------------------------------------------------------
// Classical sequences.
// ---------------------------------------------------------------------------

/// Harmonic number H_n = sum_{k=1..n} 1/k; H_0 = 0 (empty-sum convention).
inline Rational harmonic(long n) {
  Rational s(0);
  for (long k = 1; k <= n; ++k) s += Rational(1, k);
  return s;
}

/// Harmonic number of order α: sum_{k=1..n} 1/k^α.
inline Rational harmonic_order(long n, long alpha) {
  if (alpha < 1) throw std::domain_error("harmonic_order: alpha must be >= 1");
  Rational s(0);
  for (long k = 1; k <= n; ++k) s += pow(Rational(k), -alpha);
  return s;
}

/// Unsigned Lah number L(n,k) = binom(n-1,k-1) n!/k!; zero outside
/// n >= k >= 1 except L(0,0) = 1.
inline BigInt lah(long n, long k) {
  if (n == 0 && k == 0) return BigInt(1);
  if (k < 1 || k > n) return BigInt(0);
  Rational v = Rational(binomial(n - 1, k - 1)) * Rational(factorial(n), factorial(k));
  return v.numerator();  // exact integer
}

/// Derangement number d_n = n! sum_{k=0..n} (-1)^k/k!.
inline BigInt derangement(long n) {
  if (n < 0) throw std::domain_error("derangement: negative n");
  Rational s(0);
  for (long k = 0; k <= n; ++k)
    s += Rational(parity_sign(k)) / Rational(factorial(k));
  return (Rational(factorial(n)) * s).numerator();
}

/// Classical unsigned Stirling numbers of the first kind, by the recurrence
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
inline BigInt stirling1_unsigned_classical(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  std::vector<BigInt> row{BigInt(1)};  // row for n=0
  for (long i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<size_t>(i) + 1);
    for (long j = 1; j <= i; ++j) {
      BigInt v = (j <= i - 1) ? BigInt((i - 1) * row[static_cast<size_t>(j)]) : BigInt(0);
      next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + v;
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// Degenerate sequences.
// ---------------------------------------------------------------------------

/// Degenerate derangement numbers d_{n,λ} = n! sum_{k=0..n} (-1)_{k,λ}/k!.
inline PolyLambda deg_derangement(long n) {
  if (n < 0) throw std::domain_error("deg_derangement: negative n");
  PolyLambda s;
  for (long k = 0; k <= n; ++k)
    s += deg_falling(Rational(-1), k) / Rational(factorial(k));
  return s * Rational(factorial(n));
}

/// Triangle of degenerate Stirling numbers of the first kind S_{1,λ}(n,k),
/// the change-of-basis coefficients from (x)_n to (x)_{k,λ}. Built from
/// S(n,k) = S(n-1,k-1) + (kλ - (n-1)) S(n-1,k), S(0,0) = 1.
class DegStirling1Table {
 public:
  explicit DegStirling1Table(long max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::domain_error("DegStirling1Table: negative max_n");
    rows_.resize(static_cast<size_t>(max_n) + 1);
    rows_[0] = {PolyLambda(1)};
    for (long n = 1; n <= max_n; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      const auto& prev = rows_[static_cast<size_t>(n - 1)];
      row.assign(static_cast<size_t>(n) + 1, PolyLambda());
      for (long k = 1; k <= n; ++k) {
        PolyLambda v = (k <= n - 1) ? prev[static_cast<size_t>(k)] : PolyLambda();
        PolyLambda w = (k >= 1 && k - 1 <= n - 1) ? prev[static_cast<size_t>(k - 1)] : PolyLambda();
        row[static_cast<size_t>(k)] =
            w + PolyLambda{Rational(-(n - 1)), Rational(k)} * v;
      }
    }
  }

  /// S_{1,λ}(n,k); zero outside the triangle.
  PolyLambda signed_value(long n, long k) const {
    if (n < 0 || k < 0 || n > max_n_ || k > n) return PolyLambda();
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

  /// [n,k]_λ = (-1)^{n-k} S_{1,λ}(n,k).
  PolyLambda unsigned_value(long n, long k) const {
    PolyLambda v = signed_value(n, k);
    return ((n - k) % 2 == 0) ? v : -v;
  }

 private:
  long max_n_;
  std::vector<std::vector<PolyLambda>> rows_;
};

inline PolyLambda deg_stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) return PolyLambda();
  return DegStirling1Table(n).signed_value(n, k);
}

inline PolyLambda deg_stirling1_unsigned(long n, long k) {
  if (n < 0 || k < 0 || k > n) return PolyLambda();
  return DegStirling1Table(n).unsigned_value(n, k);
}

// ---------------------------------------------------------------------------
// Degenerate harmonic numbers: the defining sum and every re-expression.
// H_def is the reference; each alternative is an identity to be checked
// against it, never assumed.
// ---------------------------------------------------------------------------

/// H_{n,λ} = sum_{k=1..n} binom(λ-1,k-1) (-1)^{k-1}/k; H_{0,λ} = 0.
inline PolyLambda H_def(long n) {
  PolyLambda s;
  for (long k = 1; k <= n; ++k)
    s += binom_lambda_minus_one(k - 1) * (Rational(parity_sign(k - 1)) / Rational(k));
  return s;
}

/// Binomial-sum expression: sum_{k=1..n} binom(n,k) (-1)^{k-1}/k · binom(λ+k-1,k-1).
inline PolyLambda H_binom(long n) {
  PolyLambda s;
  for (long k = 1; k <= n; ++k) {
    Rational w = Rational(binomial(n, k)) * Rational(parity_sign(k - 1)) / Rational(k);
    s += binom_lambda_plus(k - 1, k - 1) * w;
  }
  return s;
}

/// Degenerate harmonic numbers of order m:
/// H^{(m)}_{n,λ} = sum_{j=1..n} (-1)^{j-1}/j^m · binom(λ-1,j-1).
inline PolyLambda H_order(long n, long m) {
  if (m < 1) throw std::domain_error("H_order: m must be >= 1");
  PolyLambda s;
  for (long j = 1; j <= n; ++j) {
    Rational w = Rational(parity_sign(j - 1)) * pow(Rational(j), -m);
    s += binom_lambda_minus_one(j - 1) * w;
  }
  return s;
}

// ---------------------------------------------------------------------------
// K^{(m)}_{n,λ} in its several forms.
// ---------------------------------------------------------------------------

/// Chain sum over weakly increasing tuples 1 <= k_1 <= ... <= k_m <= n of
/// b_{k_1}/(k_1 k_2 ... k_m), evaluated for every n at once by m passes of
/// "divide by index, then prefix sum". b is 1-indexed: b[i] holds b_{i+1}.
inline std::vector<PolyLambda> chain_sum_dp(const std::vector<PolyLambda>& b, long m) {
  if (m < 1) throw std::domain_error("chain_sum_dp: m must be >= 1");
  std::vector<PolyLambda> w = b;
  for (long r = 0; r < m; ++r) {
    for (size_t j = 0; j < w.size(); ++j) w[j] /= Rational(static_cast<long>(j) + 1);
    for (size_t j = 1; j < w.size(); ++j) w[j] += w[j - 1];
  }
  return w;
}

/// Literal enumeration of the same chain sum; exponential in m, retained as
/// the trust anchor for the DP.
inline PolyLambda chain_sum_enum(const std::vector<PolyLambda>& b, long n, long m) {
  if (m < 1) throw std::domain_error("chain_sum_enum: m must be >= 1");
  if (n < 1 || n > static_cast<long>(b.size())) throw std::domain_error("chain_sum_enum: bad n");
  PolyLambda total;
  std::vector<long> idx(static_cast<size_t>(m), 1);
  while (true) {
    Rational prod(1);
    for (long v : idx) prod *= Rational(v);
    total += b[static_cast<size_t>(idx[0] - 1)] / prod;
    // next weakly increasing tuple with entries in [1, n]
    long pos = m - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    long v = ++idx[static_cast<size_t>(pos)];
    for (long i = pos + 1; i < m; ++i) idx[static_cast<size_t>(i)] = v;
  }
  return total;
}

/// The chain-sum weights for the K family: b_j = (-1)^{j-1} binom(λ-1,j-1).
inline std::vector<PolyLambda> K_chain_weights(long max_n) {
  std::vector<PolyLambda> b;
  b.reserve(static_cast<size_t>(max_n));
  for (long j = 1; j <= max_n; ++j)
    b.push_back(binom_lambda_minus_one(j - 1) * Rational(parity_sign(j - 1)));
  return b;
}

/// K^{(m)}_{n,λ} for every n <= max_n by the chain-sum DP.
inline std::vector<PolyLambda> K_nested_all(long max_n, long m) {
  return chain_sum_dp(K_chain_weights(max_n), m);
}

/// Chain-sum form of K^{(m)}_{n,λ}.
inline PolyLambda K_nested(long n, long m) {
  if (n < 1) throw std::domain_error("K_nested: n must be >= 1");
  return K_nested_all(n, m)[static_cast<size_t>(n - 1)];
}

/// Literal chain enumeration of K^{(m)}_{n,λ}; small-n oracle for K_nested.
inline PolyLambda K_nested_enum(long n, long m) {
  if (n < 1) throw std::domain_error("K_nested_enum: n must be >= 1");
  return chain_sum_enum(K_chain_weights(n), n, m);
}

/// Double-sum form:
/// K^{(m)}_{n,λ} = sum_{j=1..n} (1/j) sum_{k=1..j} binom(j,k) (-1)^{k-1}/k^{m-1} binom(λ+k-1,k-1).
inline PolyLambda K_binom(long n, long m) {
  if (n < 1 || m < 1) throw std::domain_error("K_binom: n, m must be >= 1");
  PolyLambda outer;
  for (long j = 1; j <= n; ++j) {
    PolyLambda inner;
    for (long k = 1; k <= j; ++k) {
      Rational w = Rational(binomial(j, k)) * Rational(parity_sign(k - 1)) *
                   pow(Rational(k), -(m - 1));
      inner += binom_lambda_plus(k - 1, k - 1) * w;
    }
    outer += inner / Rational(j);
  }
  return outer;
}

/// Single-sum form:
/// sum_{k=1..n} binom(n,k) (-1)^{k-1}/k^m · binom(λ+k-1,k-1).
inline PolyLambda K_single_sum(long n, long m) {
  if (n < 1 || m < 1) throw std::domain_error("K_single_sum: n, m must be >= 1");
  PolyLambda s;
  for (long k = 1; k <= n; ++k) {
    Rational w = Rational(binomial(n, k)) * Rational(parity_sign(k - 1)) * pow(Rational(k), -m);
    s += binom_lambda_plus(k - 1, k - 1) * w;
  }
  return s;
}

/// Lah-number form:
/// K^{(m)}_{n,λ} = sum_{j=1..n} (1/j!) sum_{k=1..j} (-1)^{k-1}/k^m binom(λ+k-1,k-1) k! L(j,k).
inline PolyLambda K_lah(long n, long m) {
  if (n < 1 || m < 1) throw std::domain_error("K_lah: n, m must be >= 1");
  PolyLambda outer;
  for (long j = 1; j <= n; ++j) {
    PolyLambda inner;
    for (long k = 1; k <= j; ++k) {
      Rational w = Rational(parity_sign(k - 1)) * pow(Rational(k), -m) *
                   Rational(factorial(k) * lah(j, k));
      inner += binom_lambda_plus(k - 1, k - 1) * w;
    }
    outer += inner / Rational(factorial(j));
  }
  return outer;
}

// ---------------------------------------------------------------------------
// Stirling- and derangement-based expressions for H_{n,λ}.
// ---------------------------------------------------------------------------

enum class StirlingVariant {
  as_printed,  // sum_k k (1)_{k,-λ} [n,k]_λ           — fails against H_def
  as_derived,  // (1/n!) sum_k k (1)_{k-1,-λ} [n,k]_λ  — holds
};

/// Stirling-number expression for H_{n,λ}, in both published variants.
/// The identity suites record which one matches H_def.
inline PolyLambda H_stirling(long n, StirlingVariant variant) {
  if (n < 1) throw std::domain_error("H_stirling: n must be >= 1");
  DegStirling1Table table(n);
  PolyLambda s;
  for (long k = 1; k <= n; ++k) {
    long fall = (variant == StirlingVariant::as_printed) ? k : k - 1;
    PolyLambda ones = substitute_neg_lambda(deg_falling(Rational(1), fall));
    s += Rational(k) * ones * table.unsigned_value(n, k);
  }
  if (variant == StirlingVariant::as_derived) s /= Rational(factorial(n));
  return s;
}

/// Derangement-convolution expression:
/// H_{n,λ} = (1/n!) sum_{j=1..n} binom(n,j) d_{n-j,λ}
///           sum_{k=1..j} k! binom(j,k) (H_{k,λ}-H_{k-1,λ}) (1)_{j-k,λ}.
inline PolyLambda H_derangement(long n) {
  if (n < 1) throw std::domain_error("H_derangement: n must be >= 1");
  std::vector<PolyLambda> h(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) h[static_cast<size_t>(i)] = H_def(i);
  PolyLambda outer;
  for (long j = 1; j <= n; ++j) {
    PolyLambda inner;
    for (long k = 1; k <= j; ++k) {
      PolyLambda diff = h[static_cast<size_t>(k)] - h[static_cast<size_t>(k - 1)];
      Rational w = Rational(factorial(k) * binomial(j, k));
      inner += w * diff * deg_falling(Rational(1), j - k);
    }
    outer += Rational(binomial(n, j)) * deg_derangement(n - j) * inner;
  }
  return outer / Rational(factorial(n));
}

/// Both sides of the falling/rising-factorial corollary:
/// lhs = (-1)^{n-1}/n! { (λ-1)_{n-1} - <λ+1>_{n-1} },
/// rhs = sum_{k=1..n-1} binom(n-1,k-1) (-1)^{k-1}/k · binom(λ+k-1,k-1).
inline std::pair<PolyLambda, PolyLambda> corollary22_sides(long n) {
  if (n < 1) throw std::domain_error("corollary22_sides: n must be >= 1");
  PolyLambda lam_m1{Rational(-1), Rational(1)};
  PolyLambda lam_p1{Rational(1), Rational(1)};
  PolyLambda lhs = (falling_poly(lam_m1, n - 1) - rising_poly(lam_p1, n - 1)) *
                   (Rational(parity_sign(n - 1)) / Rational(factorial(n)));
  PolyLambda rhs;
  for (long k = 1; k <= n - 1; ++k) {
    Rational w = Rational(binomial(n - 1, k - 1)) * Rational(parity_sign(k - 1)) / Rational(k);
    rhs += binom_lambda_plus(k - 1, k - 1) * w;
  }
  return {lhs, rhs};
}

/// Both sides of the single-sum-vs-chain-sum identity:
/// lhs = sum_k binom(n,k) (-1)^{k-1}/k^m binom(λ+k-1,k-1),
/// rhs = chain sum of (-1)^{k1-1} binom(λ-1,k1-1)/(k1...km).
inline std::pair<PolyLambda, PolyLambda> thm26_sides(long n, long m) {
  return {K_single_sum(n, m), K_nested(n, m)};
}

// ---------------------------------------------------------------------------
// Binomial inversion and the iterated weighted transform.
// Sequences are 1-indexed: element i of the vector holds a_{i+1}.
// ---------------------------------------------------------------------------

/// b_n = sum_{k=1..n} binom(n,k) (-1)^{k-1} a_k. Self-inverse.
inline std::vector<PolyLambda> binomial_inversion(const std::vector<PolyLambda>& a) {
  std::vector<PolyLambda> b(a.size());
  for (size_t n = 1; n <= a.size(); ++n) {
    PolyLambda s;
    for (size_t k = 1; k <= n; ++k) {
      Rational w = Rational(binomial(static_cast<long>(n), static_cast<long>(k))) *
                   Rational(parity_sign(static_cast<long>(k) - 1));
      s += w * a[k - 1];
    }
    b[n - 1] = s;
  }
  return b;
}

struct WeightedTransformResult {
  std::vector<PolyLambda> direct;  // sum_k binom(n,k)(-1)^{k-1} a_k / k^m
  std::vector<PolyLambda> chain;   // chain-sum DP over b = inversion(a)
};

/// Evaluates both sides of the direct-vs-chain-sum identity for an arbitrary
/// sequence a; the two vectors must agree entrywise.
inline WeightedTransformResult iterated_weighted_transform(const std::vector<PolyLambda>& a,
                                                           long m) {
  if (m < 1) throw std::domain_error("iterated_weighted_transform: m must be >= 1");
  WeightedTransformResult r;
  r.direct.resize(a.size());
  for (size_t n = 1; n <= a.size(); ++n) {
    PolyLambda s;
    for (size_t k = 1; k <= n; ++k) {
      Rational w = Rational(binomial(static_cast<long>(n), static_cast<long>(k))) *
                   Rational(parity_sign(static_cast<long>(k) - 1)) *
                   pow(Rational(static_cast<long>(k)), -m);
      s += w * a[k - 1];
    }
    r.direct[n - 1] = s;
  }
  r.chain = chain_sum_dp(binomial_inversion(a), m);
  return r;
}

// ---------------------------------------------------------------------------
// Sequence tables for emission.
// ---------------------------------------------------------------------------

enum class SequenceId {
  H,
  H_order,
  K,
  stirling1_unsigned,
  stirling1_signed,
  lah,
  derangement,
  deg_derangement,
  harmonic,
  harmonic_order,
};

inline const std::vector<std::pair<SequenceId, const char*>>& sequence_id_names() {
  static const std::vector<std::pair<SequenceId, const char*>> names = {
      {SequenceId::H, "H"},
      {SequenceId::H_order, "H_order"},
      {SequenceId::K, "K"},
      {SequenceId::stirling1_unsigned, "stirling1_unsigned"},
      {SequenceId::stirling1_signed, "stirling1_signed"},
      {SequenceId::lah, "lah"},
      {SequenceId::derangement, "derangement"},
      {SequenceId::deg_derangement, "deg_derangement"},
      {SequenceId::harmonic, "harmonic"},
      {SequenceId::harmonic_order, "harmonic_order"},
  };
  return names;
}

inline std::string sequence_id_name(SequenceId id) {
  for (const auto& [sid, name] : sequence_id_names())
    if (sid == id) return name;
  throw std::logic_error("sequence_id_name: unmapped id");
}

inline SequenceId parse_sequence_id(const std::string& s) {
  for (const auto& [sid, name] : sequence_id_names())
    if (s == name) return sid;
  throw std::invalid_argument("unknown sequence id '" + s + "'");
}

/// True when the id takes a second index (order m, or column k).
inline bool sequence_needs_second_index(SequenceId id) {
  switch (id) {
    case SequenceId::H_order:
    case SequenceId::K:
    case SequenceId::harmonic_order:
    case SequenceId::stirling1_unsigned:
    case SequenceId::stirling1_signed:
    case SequenceId::lah:
      return true;
    default:
      return false;
  }
}

/// True when the family has a classical (λ=0) counterpart to compare
/// against.
inline bool sequence_has_classical_limit(SequenceId id) {
  switch (id) {
    case SequenceId::H:
    case SequenceId::H_order:
    case SequenceId::deg_derangement:
    case SequenceId::stirling1_unsigned:
      return true;
    default:
      return false;
  }
}

struct SequenceRow {
  long index;
  PolyLambda value;  // classical sequences are constant polynomials
};

/// Labeled (sequence id, index) -> value map for emission. Every stored
/// value is in canonical PolyLambda form.
struct SequenceTable {
  SequenceId id;
  std::optional<long> second_index;
  std::vector<SequenceRow> rows;
};

/// Rows 0..n (1..n for K). m is the order for H_order/harmonic_order/K and
/// the column k for the Stirling and Lah triangles.
inline SequenceTable build_sequence_table(SequenceId id, long n, std::optional<long> m) {
  if (n < 1) throw std::invalid_argument("build_sequence_table: n must be >= 1");
  if (sequence_needs_second_index(id) && !m)
    throw std::invalid_argument("sequence '" + sequence_id_name(id) +
                                "' requires a second index (--m)");
  if (!sequence_needs_second_index(id) && m)
    throw std::invalid_argument("sequence '" + sequence_id_name(id) +
                                "' does not take a second index");
  SequenceTable t{id, m, {}};
  switch (id) {
    case SequenceId::H:
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, H_def(i)});
      break;
    case SequenceId::H_order:
      if (*m < 1) throw std::invalid_argument("H_order: m must be >= 1");
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, H_order(i, *m)});
      break;
    case SequenceId::K: {
      if (*m < 1) throw std::invalid_argument("K: m must be >= 1");
      auto all = K_nested_all(n, *m);
      for (long i = 1; i <= n; ++i) t.rows.push_back({i, all[static_cast<size_t>(i - 1)]});
      break;
    }
    case SequenceId::stirling1_unsigned:
    case SequenceId::stirling1_signed: {
      if (*m < 0) throw std::invalid_argument("stirling1: k must be >= 0");
      DegStirling1Table table(n);
      for (long i = 0; i <= n; ++i)
        t.rows.push_back({i, id == SequenceId::stirling1_unsigned
                                 ? table.unsigned_value(i, *m)
                                 : table.signed_value(i, *m)});
      break;
    }
    case SequenceId::lah:
      if (*m < 0) throw std::invalid_argument("lah: k must be >= 0");
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, PolyLambda(Rational(lah(i, *m)))});
      break;
    case SequenceId::derangement:
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, PolyLambda(Rational(derangement(i)))});
      break;
    case SequenceId::deg_derangement:
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, deg_derangement(i)});
      break;
    case SequenceId::harmonic:
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, PolyLambda(harmonic(i))});
      break;
    case SequenceId::harmonic_order:
      if (*m < 1) throw std::invalid_argument("harmonic_order: m must be >= 1");
      for (long i = 0; i <= n; ++i) t.rows.push_back({i, PolyLambda(harmonic_order(i, *m))});
      break;
  }
  return t;
}

/// Classical value paired with a degenerate sequence at λ=0; used by the
/// limit comparison. m is the order (H_order) or column (stirling).
inline Rational classical_counterpart(SequenceId id, long i, std::optional<long> m) {
  switch (id) {
    case SequenceId::H:
      return harmonic(i);
    case SequenceId::H_order:
      return harmonic_order(i, *m);
    case SequenceId::deg_derangement:
      return Rational(derangement(i));
    case SequenceId::stirling1_unsigned:
      return Rational(stirling1_unsigned_classical(i, *m));
    default:
      throw std::invalid_argument("sequence '" + sequence_id_name(id) +
                                  "' has no classical counterpart");
  }
}

}  // namespace degen
