#include "hooklab/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

int common_order(const TruncatedSeries& a, const TruncatedSeries& b, OrderPolicy policy) {
  if (a.order() != b.order() && policy == OrderPolicy::strict)
    throw order_mismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
  return std::min(a.order(), b.order());
}

std::size_t nonzeros(const TruncatedSeries& s) {
  return static_cast<std::size_t>(
      std::count_if(s.coeffs().begin(), s.coeffs().end(), [](const BigInt& v) { return sgn(v) != 0; }));
}

inline void addmul(BigInt& acc, const BigInt& x, const BigInt& y) {
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

// Orders the operands so the outer loop runs over the sparser one.
std::pair<const TruncatedSeries*, const TruncatedSeries*> by_sparsity(const TruncatedSeries& a,
                                                                      const TruncatedSeries& b) {
  return nonzeros(a) <= nonzeros(b) ? std::pair{&a, &b} : std::pair{&b, &a};
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("coefficient count must be order + 1");
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(order, 0, 1); }

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, const BigInt& coeff) {
  TruncatedSeries s(order);
  if (exponent < 0) throw std::invalid_argument("negative exponent in TruncatedSeries");
  if (exponent <= order) s.coeffs_[exponent] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise the order of a truncated series");
  return TruncatedSeries(order, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncatedSeries::is_zero() const { return nonzeros(*this) == 0; }

TruncatedSeries& TruncatedSeries::shift(int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative shift of a TruncatedSeries");
  const int N = order();
  for (int n = N; n >= 0; --n) coeffs_[n] = n >= exponent ? coeffs_[n - exponent] : BigInt(0);
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_binomial(int exponent, int sign) {
  if (exponent < 1) throw std::invalid_argument("binomial exponent must be positive");
  for (int n = order(); n >= exponent; --n) {
    if (sign > 0) coeffs_[n] += coeffs_[n - exponent];
    else coeffs_[n] -= coeffs_[n - exponent];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus(int exponent) {
  if (exponent < 1) throw std::invalid_argument("geometric period must be positive");
  for (int n = exponent; n <= order(); ++n) coeffs_[n] += coeffs_[n - exponent];
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_sparse(std::span<const Monomial> poly) {
  std::vector<BigInt> out(coeffs_.size());
  for (const auto& m : poly) {
    if (m.exponent < 0) throw std::invalid_argument("negative exponent in sparse factor");
    for (int n = m.exponent; n <= order(); ++n) out[n] += coeffs_[n - m.exponent] * m.coeff;
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  common_order(*this, rhs, OrderPolicy::strict);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  common_order(*this, rhs, OrderPolicy::strict);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b, OrderPolicy policy) {
  const int N = common_order(a, b, policy);
  TruncatedSeries out = a.truncated(N);
  out += b.truncated(N);
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b, OrderPolicy policy) {
  const int N = common_order(a, b, policy);
  TruncatedSeries out = a.truncated(N);
  out -= b.truncated(N);
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const BigInt& k) {
  TruncatedSeries out = a;
  out *= k;
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, OrderPolicy policy) {
  const int N = common_order(a, b, policy);
  const auto [sparse, dense] = by_sparsity(a, b);
  std::vector<int> support;
  for (int i = 0; i <= N; ++i)
    if (sgn((*sparse)[i]) != 0) support.push_back(i);

  std::vector<BigInt> out(static_cast<std::size_t>(N) + 1);
#pragma omp parallel for schedule(dynamic, 16) if (N >= 256)
  for (int n = 0; n <= N; ++n) {
    BigInt acc = 0;
    for (int i : support) {
      if (i > n) break;
      addmul(acc, (*sparse)[i], (*dense)[n - i]);
    }
    out[n] = std::move(acc);
  }
  return TruncatedSeries(N, std::move(out));
}

TruncatedSeries series_mul_serial(const TruncatedSeries& a, const TruncatedSeries& b, OrderPolicy policy) {
  const int N = common_order(a, b, policy);
  std::vector<BigInt> out(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= N; ++j) addmul(out[i + j], a[i], b[j]);
  }
  return TruncatedSeries(N, std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n)
    if (a[n] != b[n]) return Discrepancy{n, a[n], b[n]};
  return std::nullopt;
}

// ---------------------------------------------------------------- Laurent

LaurentSeries::LaurentSeries(int min_exp, int order) : min_exp_(min_exp) {
  if (order < min_exp) throw std::invalid_argument("Laurent series order below its minimum exponent");
  coeffs_.resize(static_cast<std::size_t>(order - min_exp) + 1);
}

LaurentSeries LaurentSeries::one(int order) {
  LaurentSeries s(0, order);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt& LaurentSeries::coeff(int exponent) const {
  return coeffs_.at(static_cast<std::size_t>(exponent - min_exp_));
}

LaurentSeries& LaurentSeries::shift(int exponent) {
  min_exp_ += exponent;
  return *this;
}

LaurentSeries& LaurentSeries::mul_binomial(int exponent, int sign) {
  if (exponent == 0) throw std::invalid_argument("binomial exponent must be nonzero");
  if (exponent > 0) {
    for (std::size_t k = coeffs_.size(); k-- > static_cast<std::size_t>(exponent);) {
      if (sign > 0) coeffs_[k] += coeffs_[k - exponent];
      else coeffs_[k] -= coeffs_[k - exponent];
    }
    return *this;
  }
  // A negative exponent lowers both ends: new(x) = old(x) + sign*old(x + d)
  // for x in [min - d, order - d], where d = -exponent.
  const auto d = static_cast<std::size_t>(-exponent);
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    BigInt v = k >= d ? coeffs_[k - d] : BigInt(0);
    if (sign > 0) v += coeffs_[k];
    else v -= coeffs_[k];
    out[k] = std::move(v);
  }
  min_exp_ += exponent;
  coeffs_ = std::move(out);
  return *this;
}

LaurentSeries& LaurentSeries::div_one_minus(int exponent) {
  if (exponent < 1) throw std::invalid_argument("geometric period must be positive");
  for (std::size_t k = static_cast<std::size_t>(exponent); k < coeffs_.size(); ++k)
    coeffs_[k] += coeffs_[k - exponent];
  return *this;
}

TruncatedSeries LaurentSeries::finalize(int order) const {
  if (order > this->order())
    throw consistency_error("Laurent series known only to order " + std::to_string(this->order()));
  for (int e = min_exp_; e < 0 && e <= this->order(); ++e)
    if (sgn(coeff(e)) != 0)
      throw consistency_error("nonzero coefficient at negative exponent " + std::to_string(e));
  TruncatedSeries out(order);
  for (int e = std::max(0, min_exp_); e <= order; ++e) out[e] = coeff(e);
  return out;
}

// ---------------------------------------------------------------- bivariate

BivariateSeries::BivariateSeries(int order_q, int order_x) : order_q_(order_q) {
  if (order_x < 0) throw std::invalid_argument("x-degree cap must be non-negative");
  slices_.assign(static_cast<std::size_t>(order_x) + 1, TruncatedSeries(order_q));
}

void BivariateSeries::add_term(int k, const TruncatedSeries& s) {
  if (k < 0) throw std::invalid_argument("negative x-degree");
  if (k > order_x()) {
    if (s.truncated(order_q_).is_zero()) return;
    throw degree_overflow("x-degree " + std::to_string(k) + " exceeds cap " + std::to_string(order_x()));
  }
  slices_[k] += s.truncated(order_q_);
}

TruncatedSeries BivariateSeries::at_x_one() const {
  TruncatedSeries out(order_q_);
  for (const auto& s : slices_) out += s;
  return out;
}

TruncatedSeries BivariateSeries::derivative_at_x_one() const {
  TruncatedSeries out(order_q_);
  for (std::size_t k = 1; k < slices_.size(); ++k) out += series_scale(slices_[k], static_cast<long>(k));
  return out;
}

int BivariateSeries::degree_x() const {
  for (int k = order_x(); k >= 0; --k)
    if (!slices_[k].is_zero()) return k;
  return -1;
}

BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order_q() != b.order_q() || a.order_x() != b.order_x())
    throw order_mismatch("bivariate orders differ");
  const int K = a.order_x();
  const int da = a.degree_x();
  const int db = b.degree_x();
  BivariateSeries out(a.order_q(), K);
  if (da < 0 || db < 0) return out;
  for (int k = 0; k <= da + db; ++k) {
    TruncatedSeries acc(a.order_q());
    bool touched = false;
    for (int j = std::max(0, k - db); j <= std::min(k, da); ++j) {
      if (a.slice(j).is_zero() || b.slice(k - j).is_zero()) continue;
      acc += series_mul(a.slice(j), b.slice(k - j));
      touched = true;
    }
    if (touched) out.add_term(k, acc);
  }
  return out;
}

}  // namespace hooklab
