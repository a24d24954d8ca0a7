#include <doctest.h>

#include "hooklab/errors.hpp"
#include "hooklab/generating.hpp"
#include "oracle.hpp"

using namespace hooklab;

namespace {

std::vector<long> head(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

TruncatedSeries gf(char family, int j, int t, int N) { return family == 'r' ? series_S(j, t, N) : series_H(j, t, N); }

BivariateSeries biv(char family, int j, int t, int N) {
  return family == 'r' ? bivariate_R(j, t, N) : bivariate_G(j, t, N);
}

const char* tag(char family, int j) {
  static const char* tags[] = {"r1", "r2", "g1", "g2"};
  return tags[(family == 'r' ? 0 : 2) + (j - 1)];
}

}  // namespace

TEST_CASE("inverse Pochhammer products") {
  CHECK(head(inv_pochhammer_product({1, 4}, 5, 5)) == std::vector<long>{1, 1, 1, 1, 2, 2});
  CHECK(head(inv_pochhammer_product({1, 5, 6}, 8, 4)) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(head(inv_pochhammer_product({2, 3}, 5, 0)) == std::vector<long>{1});
  CHECK_THROWS_AS(inv_pochhammer_product({}, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(inv_pochhammer_product({6}, 5, 3), std::invalid_argument);
  // partitions into parts from the residue classes, counted by brute force
  const auto p = inv_pochhammer_product({1, 4}, 5, 30);
  for (int n = 0; n <= 30; ++n) {
    long c = 0;
    oracle::each_partition(n, [&](const oracle::Parts& parts) { c += oracle::in_class("r2", parts); });
    CHECK(p[n] == c);
  }
}

TEST_CASE("rational factors") {
  CHECK(head(rational_factor({{1, 1}, {4, 1}}, 5, 9)) == std::vector<long>{0, 1, 0, 0, 1, 0, 1, 0, 0, 1});
  CHECK(head(rational_factor({{2, 1}, {10, 1}, {11, -1}, {12, 1}}, 16, 12)) ==
        std::vector<long>{0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1});
  CHECK(rational_factor({}, 3, 6).is_zero());
}

TEST_CASE("small coefficients") {
  CHECK(head(series_S(1, 1, 6)) == std::vector<long>{0, 1, 1, 1, 3, 3, 5});
  CHECK(head(series_S(2, 1, 5)) == std::vector<long>{0, 1, 1, 1, 2, 3});
  // (2) and (3) each have one 2-hook, (4) and (3,1) one each
  CHECK(head(series_S(1, 2, 4)) == std::vector<long>{0, 0, 1, 1, 2});
  CHECK(head(series_H(1, 1, 5)) == std::vector<long>{0, 1, 1, 1, 1, 3});
  CHECK(head(series_H(2, 1, 6)) == std::vector<long>{0, 1, 1, 1, 1, 2, 4});
  CHECK(head(series_H(2, 2, 2)) == std::vector<long>{0, 0, 1});
  CHECK(head(series_S(1, 1, 9)) == std::vector<long>{0, 1, 1, 1, 3, 3, 5, 5, 7, 10});
  CHECK(head(series_S(1, 2, 9)) == std::vector<long>{0, 0, 1, 1, 2, 2, 4, 4, 6, 8});
  CHECK(head(series_H(1, 1, 9)) == std::vector<long>{0, 1, 1, 1, 1, 3, 5, 5, 5, 7});
  CHECK(head(series_H(1, 2, 9)) == std::vector<long>{0, 0, 1, 1, 1, 2, 4, 4, 4, 6});
  CHECK(head(series_S(1, 1, 0)) == std::vector<long>{0});
  CHECK_THROWS_AS(series_S(3, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(series_H(1, 3, 5), std::invalid_argument);
}

TEST_CASE("all eight series equal the brute-force census for n <= 45") {
  const int N = 45;
  const auto ex = oracle::census_all(N, 2);
  for (char family : {'r', 'g'})
    for (int j = 1; j <= 2; ++j) {
      const auto& c = ex[(family == 'r' ? 0 : 2) + (j - 1)];
      for (int t = 1; t <= 2; ++t) {
        const auto s = gf(family, j, t, N);
        for (int n = 0; n <= N; ++n) {
          INFO(family, j, t, " n=", n);
          CHECK(s[n] == c.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - 1)]);
        }
      }
    }
}

TEST_CASE("bivariate refinements: marginals and small tables") {
  const int N = 40;
  const auto ex = oracle::census_all(N, 2);
  for (char family : {'r', 'g'})
    for (int j = 1; j <= 2; ++j)
      for (int t = 1; t <= 2; ++t) {
        const auto b = biv(family, j, t, N);
        const auto& c = ex[(family == 'r' ? 0 : 2) + (j - 1)];
        const auto ones = b.at_x_one();
        const auto deriv = b.derivative_at_x_one();
        const auto s = gf(family, j, t, N);
        for (int n = 0; n <= N; ++n) {
          INFO(tag(family, j), " t=", t, " n=", n);
          CHECK(ones[n] == c.members[static_cast<std::size_t>(n)]);
          CHECK(deriv[n] == s[n]);
          for (int k = 0; k <= b.order_x(); ++k) CHECK(b.coeff(n, k) >= 0);
        }
      }

  const auto r = bivariate_R(1, 1, 10);
  CHECK(r.coeff(4, 0) == 0);
  CHECK(r.coeff(4, 1) == 1);
  CHECK(r.coeff(4, 2) == 1);
  const auto g = bivariate_G(1, 1, 10);
  CHECK(g.coeff(4, 1) == 1);
  CHECK(g.at_x_one()[4] == 1);
}

TEST_CASE("bivariate coefficients equal the statistic distribution") {
  // coefficient of x^k q^n counts members of size n with exactly k t-hooks
  const int N = 25;
  for (char family : {'r', 'g'})
    for (int j = 1; j <= 2; ++j)
      for (int t = 1; t <= 2; ++t) {
        const auto b = biv(family, j, t, N);
        for (int n = 0; n <= N; ++n) {
          std::vector<long> dist(static_cast<std::size_t>(b.order_x()) + 1, 0);
          oracle::each_partition(n, [&](const oracle::Parts& p) {
            if (oracle::in_class(tag(family, j), p)) ++dist.at(static_cast<std::size_t>(oracle::count_hooks(p, t)));
          });
          for (int k = 0; k <= b.order_x(); ++k) CHECK(b.coeff(n, k) == dist[static_cast<std::size_t>(k)]);
        }
      }
}

TEST_CASE("x-degree cap overflow is an error") {
  CHECK_THROWS_AS(bivariate_R(1, 1, 20, 1), degree_overflow);
  CHECK_THROWS_AS(bivariate_G(2, 2, 20, 1), degree_overflow);
  CHECK_NOTHROW(bivariate_R(1, 1, 20, 4));
  CHECK(default_x_cap('r', 1, 16) == 6);
  CHECK(default_x_cap('g', 2, 16) == 16);
}

TEST_CASE("sum-product identities") {
  for (Identity which : {Identity::RR1, Identity::LG1}) {
    CHECK(identity_check_sum_product(which, 0).holds);
    const auto rep = identity_check_sum_product(which, 200);
    CHECK(rep.holds);
    CHECK_FALSE(rep.first_mismatch.has_value());
  }
}

TEST_CASE("coefficient sequences are weakly increasing to n = 500") {
  const int N = 500;
  for (auto s : {series_S(1, 1, N), series_S(1, 2, N), series_S(2, 1, N), series_S(2, 2, N), series_H(2, 1, N),
                 series_H(2, 2, N)}) {
    for (int n = 1; n <= N; ++n) CHECK(s[n] >= s[n - 1]);
    for (int n = 0; n <= N; ++n) CHECK(s[n] >= 0);
  }
}

TEST_CASE("S12 equals S11 minus one product plus the other") {
  const int N = 500;
  const auto lhs = series_S(1, 2, N);
  const auto rhs = series_S(1, 1, N) - inv_pochhammer_product({1, 4}, 5, N) + inv_pochhammer_product({2, 3}, 5, N);
  CHECK_FALSE(first_discrepancy(lhs, rhs).has_value());
}

TEST_CASE("truncation stability") {
  for (char family : {'r', 'g'})
    for (int j = 1; j <= 2; ++j)
      for (int t = 1; t <= 2; ++t) CHECK(gf(family, j, t, 200).truncated(90) == gf(family, j, t, 90));
}

TEST_CASE("class_for") {
  CHECK(class_for('r', 1) == ClassId::R1);
  CHECK(class_for('g', 2) == ClassId::G2);
  CHECK_THROWS_AS(class_for('x', 1), std::invalid_argument);
}
