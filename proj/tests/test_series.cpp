#include <doctest.h>

#include <random>

#include "hooklab/errors.hpp"
#include "hooklab/series.hpp"

using namespace hooklab;

namespace {

TruncatedSeries from(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return TruncatedSeries(static_cast<int>(v.size()) - 1, v);
}

TruncatedSeries random_series(int order, std::mt19937& rng, int density_pct = 100) {
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::uniform_int_distribution<int> pct(0, 99);
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n)
    if (pct(rng) < density_pct) s[n] = coeff(rng);
  return s;
}

TruncatedSeries naive_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK(from({1, 1, 0}) * from({1, -1, 0}) == from({1, 0, -1}));
  const auto s = from({3, -2, 5, 7});
  CHECK(s * TruncatedSeries::one(3) == s);
  TruncatedSeries geometric(6);
  for (int n = 0; n <= 6; ++n) geometric[n] = 1;
  CHECK(from({1, -1, 0, 0, 0, 0, 0}) * geometric == TruncatedSeries::one(6));
  CHECK(series_scale(s, 2) == from({6, -4, 10, 14}));
  CHECK(s - s == TruncatedSeries(3));
  CHECK((s - s).is_zero());
}

TEST_CASE("order policy") {
  const auto a = from({1, 2, 3});
  const auto b = from({1, 1});
  CHECK_THROWS_AS(series_add(a, b), order_mismatch);
  CHECK_THROWS_AS(series_mul(a, b), order_mismatch);
  CHECK_THROWS_AS(a + b, order_mismatch);
  CHECK(series_add(a, b, OrderPolicy::truncate) == from({2, 3}));
  CHECK(series_mul(a, b, OrderPolicy::truncate) == from({1, 3}));
  CHECK(a.truncated(1) == from({1, 2}));
  CHECK_THROWS_AS(TruncatedSeries(2, {1, 2}), std::invalid_argument);
}

TEST_CASE("simple factors") {
  auto s = TruncatedSeries::one(6);
  s.div_one_minus(2);
  CHECK(s == from({1, 0, 1, 0, 1, 0, 1}));
  s.mul_binomial(2, -1);
  CHECK(s == TruncatedSeries::one(6));
  s.shift(3);
  CHECK(s == TruncatedSeries::monomial(6, 3));
  s.shift(5);
  CHECK(s.is_zero());
  auto t = TruncatedSeries::one(5);
  const Monomial poly[] = {{1, 1}, {4, 1}};
  t.mul_sparse(poly);
  CHECK(t == from({0, 1, 0, 0, 1, 0}));
}

TEST_CASE("parallel and serial products agree with the schoolbook product") {
  std::mt19937 rng(7);
  for (int order : {0, 1, 10, 300, 700}) {
    for (int density : {100, 10}) {
      const auto a = random_series(order, rng, density);
      const auto b = random_series(order, rng);
      const auto expect = naive_mul(a, b);
      CHECK(series_mul(a, b) == expect);
      CHECK(series_mul_serial(a, b) == expect);
      CHECK(series_mul(b, a) == expect);
    }
  }
}

TEST_CASE("first_discrepancy") {
  const auto a = from({1, 2, 3, 4});
  auto b = a;
  CHECK_FALSE(first_discrepancy(a, b).has_value());
  b[2] = 9;
  const auto d = first_discrepancy(a, b);
  REQUIRE(d.has_value());
  CHECK(d->exponent == 2);
  CHECK(d->lhs == 3);
  CHECK(d->rhs == 9);
  CHECK_FALSE(first_discrepancy(a, from({1, 2})).has_value());
}

TEST_CASE("Laurent series with one negative exponent") {
  // (1 + q^{-1}) q^2 = q + q^2
  auto l = LaurentSeries::one(5);
  l.mul_binomial(-1, +1);
  CHECK(l.min_exp() == -1);
  CHECK(l.order() == 4);
  CHECK(l.coeff(-1) == 1);
  CHECK_THROWS_AS((void)l.finalize(3), consistency_error);
  l.shift(2);
  CHECK(l.finalize(4) == from({0, 1, 1, 0, 0}));
  CHECK_THROWS_AS((void)l.finalize(7), consistency_error);

  auto g = LaurentSeries::one(4);
  g.div_one_minus(1);
  CHECK(g.finalize(4) == from({1, 1, 1, 1, 1}));
}

TEST_CASE("bivariate series") {
  BivariateSeries a(4, 2);
  a.add_term(0, TruncatedSeries::one(4));
  a.add_term(1, TruncatedSeries::monomial(4, 1));
  CHECK(a.degree_x() == 1);
  const auto sq = bivariate_mul(a, a);  // (1 + x q)^2
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(2, 2) == 1);
  CHECK(sq.at_x_one() == from({1, 2, 1, 0, 0}));
  CHECK(sq.derivative_at_x_one() == from({0, 2, 2, 0, 0}));
  CHECK_THROWS_AS(bivariate_mul(sq, a), degree_overflow);
  BivariateSeries b(4, 1);
  CHECK_THROWS_AS(b.add_term(2, TruncatedSeries::one(4)), degree_overflow);
  b.add_term(2, TruncatedSeries(4));  // zero beyond the cap is fine
  CHECK(b.degree_x() == -1);
  CHECK_THROWS_AS(bivariate_mul(a, BivariateSeries(3, 2)), order_mismatch);
}
