#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hooklab/partition.hpp"

namespace hooklab {

/// How binary operations treat operands of different order.
enum class OrderPolicy {
  strict,    // throw order_mismatch
  truncate,  // work at the smaller order
};

/// c * q^exponent with a small integer coefficient.
struct Monomial {
  int exponent = 0;
  long coeff = 1;
};

/// sum_{n=0}^{order} c_n q^n + O(q^{order+1}) with exact integer coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(int order, std::vector<BigInt> coeffs);

  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int order, int exponent, const BigInt& coeff = 1);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const BigInt& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  [[nodiscard]] BigInt& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Same series known to a lower order.
  [[nodiscard]] TruncatedSeries truncated(int order) const;
  [[nodiscard]] bool is_zero() const;

  // In-place multiplications by simple factors; all O(order).
  TruncatedSeries& shift(int exponent);                   // * q^e, e >= 0
  TruncatedSeries& mul_binomial(int exponent, int sign);  // * (1 + sign q^e), e >= 1
  TruncatedSeries& div_one_minus(int exponent);           // * 1/(1 - q^e), e >= 1
  TruncatedSeries& mul_sparse(std::span<const Monomial> poly);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const BigInt& k);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b,
                           OrderPolicy policy = OrderPolicy::strict);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b,
                           OrderPolicy policy = OrderPolicy::strict);
TruncatedSeries series_scale(const TruncatedSeries& a, const BigInt& k);

/// Cauchy product, parallel over output coefficients (OpenMP).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           OrderPolicy policy = OrderPolicy::strict);
/// Single-threaded reference for series_mul.
TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b,
                                  OrderPolicy policy = OrderPolicy::strict);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// First exponent where two series differ, comparing up to the smaller order.
struct Discrepancy {
  int exponent = 0;
  BigInt lhs;
  BigInt rhs;
};
std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b);

/// Truncated series that may carry finitely many negative exponents.
///
/// Only used while assembling a term that contains a factor like
/// (1 + q^{-1}); finalize() converts back and rejects any surviving
/// negative-exponent coefficient.
class LaurentSeries {
 public:
  LaurentSeries(int min_exp, int order);  // zero series
  static LaurentSeries one(int order);

  [[nodiscard]] int min_exp() const noexcept { return min_exp_; }
  [[nodiscard]] int order() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const BigInt& coeff(int exponent) const;

  LaurentSeries& shift(int exponent);                   // any sign
  LaurentSeries& mul_binomial(int exponent, int sign);  // exponent may be negative
  LaurentSeries& div_one_minus(int exponent);           // exponent >= 1

  /// Converts to a TruncatedSeries of the given order (<= this->order()).
  /// Throws consistency_error if a nonzero coefficient sits below q^0.
  [[nodiscard]] TruncatedSeries finalize(int order) const;

 private:
  int min_exp_;
  std::vector<BigInt> coeffs_;  // coeffs_[k] is the coefficient of q^{min_exp_ + k}
};

/// sum_{n,k} c(n,k) x^k q^n truncated at q-order and x-degree.
///
/// Stored by x-degree: slice(k) is the q-series multiplying x^k.
class BivariateSeries {
 public:
  BivariateSeries(int order_q, int order_x);

  [[nodiscard]] int order_q() const noexcept { return order_q_; }
  [[nodiscard]] int order_x() const noexcept { return static_cast<int>(slices_.size()) - 1; }
  [[nodiscard]] const BigInt& coeff(int n, int k) const { return slices_.at(k)[n]; }
  [[nodiscard]] const TruncatedSeries& slice(int k) const { return slices_.at(k); }

  /// this += x^k * s. Throws degree_overflow if k exceeds order_x while s
  /// is nonzero.
  void add_term(int k, const TruncatedSeries& s);

  /// Row sums: the series at x = 1.
  [[nodiscard]] TruncatedSeries at_x_one() const;
  /// d/dx at x = 1: sum_k k * slice(k).
  [[nodiscard]] TruncatedSeries derivative_at_x_one() const;
  /// Largest k with a nonzero slice, or -1 for the zero series.
  [[nodiscard]] int degree_x() const;

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  int order_q_;
  std::vector<TruncatedSeries> slices_;
};

/// Product truncated at (a.order_q, a.order_x). Orders must match; throws
/// degree_overflow if a nonzero coefficient lands above the x cap.
BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b);

}  // namespace hooklab
