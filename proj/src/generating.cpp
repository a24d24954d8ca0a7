#include "hooklab/generating.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

void check_jt(int j, int t, int N) {
  if (j != 1 && j != 2) throw std::invalid_argument("class index j must be 1 or 2");
  if (t != 1 && t != 2) throw std::invalid_argument("hook length t must be 1 or 2");
  if (N < 0) throw std::invalid_argument("series order must be non-negative");
}

// Visits q^{n^2} / (q;q)_n and the previous 1/(q;q)_{n-1} for every n >= 0
// with n^2 <= N.
void for_each_rr_term(int N, const std::function<void(int n, const TruncatedSeries& inv_n,
                                                      const TruncatedSeries& inv_prev)>& visit) {
  TruncatedSeries inv = TruncatedSeries::one(N);
  TruncatedSeries prev = inv;
  for (int n = 0; n * n <= N; ++n) {
    if (n > 0) {
      prev = inv;
      inv.div_one_minus(n);
    }
    visit(n, inv, prev);
  }
}

TruncatedSeries shifted(TruncatedSeries s, int exponent) {
  if (exponent > s.order()) return TruncatedSeries(s.order());
  return s.shift(exponent);
}

// Visits q^{n^2+n} (-q^{-1};q^2)_n / (q^2;q^2)_n for every n with
// n^2 + n - 1 <= N. The (1 + q^{-1}) factor goes through a Laurent
// intermediate carrying one extra order of headroom.
void for_each_lg_term(int N, const std::function<void(int n, const TruncatedSeries& term)>& visit) {
  LaurentSeries term = LaurentSeries::one(N + 1);
  visit(0, term.finalize(N));
  for (int n = 1; n * n + n - 1 <= N; ++n) {
    term.mul_binomial(2 * n - 3, +1);
    term.div_one_minus(2 * n);
    term.shift(2 * n);
    visit(n, term.finalize(N));
  }
}

// Visits q^{n^2+n} (-q;q^2)_{n+1} / (q^2;q^2)_n for every n with n^2 + n <= N.
void for_each_lg_shifted_term(int N, const std::function<void(int n, const TruncatedSeries& term)>& visit) {
  TruncatedSeries term = TruncatedSeries::one(N);
  if (N >= 1) term.mul_binomial(1, +1);
  visit(0, term);
  for (int n = 1; n * n + n <= N; ++n) {
    term.mul_binomial(2 * n + 1, +1);
    term.div_one_minus(2 * n);
    term.shift(2 * n);
    visit(n, term);
  }
}

TruncatedSeries times_rational(const TruncatedSeries& base, const std::vector<Monomial>& numerator, int period) {
  TruncatedSeries out = base;
  out.mul_sparse(numerator);
  out.div_one_minus(period);
  return out;
}

TruncatedSeries rr_product(int N) { return inv_pochhammer_product({1, 4}, 5, N); }
TruncatedSeries lg_product(int N) { return inv_pochhammer_product({1, 5, 6}, 8, N); }

// q^e / (1 - q^e) to order N.
TruncatedSeries geometric_tail(int e, int N) {
  TruncatedSeries g = TruncatedSeries::monomial(N, e);
  return g.div_one_minus(e);
}

BivariateSeries factor(int N, int K, std::initializer_list<std::pair<int, TruncatedSeries>> slices) {
  BivariateSeries f(N, K);
  for (const auto& [k, s] : slices) f.add_term(k, s);
  return f;
}

// 1 + x q^m / (1 - q^m): one factor of the distinct-part-count refinement.
BivariateSeries distinct_factor(int m, int N, int K) {
  return factor(N, K, {{0, TruncatedSeries::one(N)}, {1, geometric_tail(m, N)}});
}

// 1 + x q^m + x^2 q^{2m} / (1 - q^m): part m > 1 contributes one 2-hook when
// it appears once and two when it repeats.
BivariateSeries two_hook_factor(int m, int N, int K) {
  TruncatedSeries twice = TruncatedSeries::monomial(N, 2 * m);
  twice.div_one_minus(m);
  return factor(N, K, {{0, TruncatedSeries::one(N)}, {1, TruncatedSeries::monomial(N, m)}, {2, twice}});
}

// 1 + q + x q^2/(1 - q): the part 1 adds a 2-hook only when repeated.
BivariateSeries ones_factor(int N, int K) {
  TruncatedSeries base = TruncatedSeries::one(N);
  if (N >= 1) base[1] = 1;
  TruncatedSeries rep = TruncatedSeries::monomial(N, 2);
  rep.div_one_minus(1);
  return factor(N, K, {{0, base}, {1, rep}});
}

// Parts a = 8n+5 and b = 8n+6 sit one apart, so when both occur the larger
// loses its gap hook:
//   1 + x q^a + x^2 q^{2a}/(1-q^a) + x q^b + x^2 q^{2b}/(1-q^b)
//     + x q^{a+b} (1 + x g_a)(1 + x g_b),    g_m = q^m / (1 - q^m).
BivariateSeries coupled_factor(int a, int b, int N, int K) {
  const TruncatedSeries ga = geometric_tail(a, N);
  const TruncatedSeries gb = geometric_tail(b, N);
  TruncatedSeries one = TruncatedSeries::one(N);

  TruncatedSeries lin = TruncatedSeries::monomial(N, a);
  lin += TruncatedSeries::monomial(N, b);
  lin += TruncatedSeries::monomial(N, a + b);

  TruncatedSeries quad = shifted(ga, a);
  quad += shifted(gb, b);
  quad += shifted(ga + gb, a + b);

  TruncatedSeries cubic = shifted(ga * gb, a + b);
  return factor(N, K, {{0, one}, {1, lin}, {2, quad}, {3, cubic}});
}

BivariateSeries product_over(const BivariateSeries& seed, int N,
                             const std::function<bool(int)>& admit,
                             const std::function<BivariateSeries(int)>& make) {
  BivariateSeries acc = seed;
  for (int m = 1; m <= N; ++m)
    if (admit(m)) acc = bivariate_mul(acc, make(m));
  return acc;
}

BivariateSeries unit(int N, int K) { return factor(N, K, {{0, TruncatedSeries::one(N)}}); }

}  // namespace

TruncatedSeries inv_pochhammer_product(const std::set<int>& residues, int modulus, int N) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (residues.empty()) throw std::invalid_argument("residue set must be nonempty");
  for (int r : residues)
    if (r < 1 || r > modulus) throw std::invalid_argument("residues must lie in [1, modulus]");
  if (N < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<bool> hit(static_cast<std::size_t>(modulus), false);
  for (int r : residues) hit[r % modulus] = true;
  TruncatedSeries out = TruncatedSeries::one(N);
  for (int k = 1; k <= N; ++k)
    if (hit[k % modulus]) out.div_one_minus(k);
  return out;
}

TruncatedSeries rational_factor(const std::vector<SignedExponent>& numerator, int period, int N) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  if (N < 0) throw std::invalid_argument("series order must be non-negative");
  TruncatedSeries out(N);
  for (const auto& term : numerator) {
    if (term.exponent < 0) throw std::invalid_argument("numerator exponents must be non-negative");
    if (term.exponent <= N) out[term.exponent] += term.sign;
  }
  return out.div_one_minus(period);
}

TruncatedSeries series_S(int j, int t, int N) {
  check_jt(j, t, N);
  if (j == 2) {
    const TruncatedSeries prod = rr_product(N);
    if (t == 1) return times_rational(prod, {{1, 1}, {4, 1}}, 5);
    return times_rational(prod, {{4, 1}, {6, 1}}, 5) + times_rational(prod, {{2, 1}, {8, 1}}, 10);
  }
  TruncatedSeries out(N);
  for_each_rr_term(N, [&](int n, const TruncatedSeries& inv, const TruncatedSeries& prev) {
    if (n == 0) return;
    out += series_scale(shifted(inv, n * n), n);
    if (t == 2) out -= shifted(prev, n * n);
  });
  return out;
}

TruncatedSeries series_H(int j, int t, int N) {
  check_jt(j, t, N);
  if (j == 2) {
    const TruncatedSeries prod = lg_product(N);
    if (t == 1) return times_rational(prod, {{1, 1}, {5, 1}, {6, 1}}, 8);
    return times_rational(prod, {{5, 1}, {6, 1}, {9, 1}}, 8) +
           times_rational(prod, {{2, 1}, {10, 1}, {11, -1}, {12, 1}}, 16);
  }
  TruncatedSeries out(N);
  auto accumulate = [&](int n, const TruncatedSeries& term) {
    if (n > 0) out += series_scale(term, n);
  };
  if (t == 1) for_each_lg_term(N, accumulate);
  else for_each_lg_shifted_term(N, accumulate);
  return out;
}

ClassId class_for(char family, int j) {
  if (family == 'r') return j == 1 ? ClassId::R1 : ClassId::R2;
  if (family == 'g') return j == 1 ? ClassId::G1 : ClassId::G2;
  throw std::invalid_argument("family must be 'r' or 'g'");
}

int default_x_cap(char /*family*/, int j, int N) {
  if (j == 1) return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(N)))) + 2;
  return N;
}

BivariateSeries bivariate_R(int j, int t, int N, int K) {
  check_jt(j, t, N);
  if (K < 0) K = default_x_cap('r', j, N);
  if (j == 1) {
    BivariateSeries out(N, K);
    for_each_rr_term(N, [&](int n, const TruncatedSeries& inv, const TruncatedSeries& prev) {
      if (t == 1) {
        out.add_term(n, shifted(inv, n * n));
        return;
      }
      // parts all > 1 contribute x^n q^{n^2+n}/(q;q)_n; a smallest part 1
      // contributes x^{n-1} q^{n^2}/(q;q)_{n-1}
      if (n * n + n <= N) out.add_term(n, shifted(inv, n * n + n));
      if (n >= 1) out.add_term(n - 1, shifted(prev, n * n));
    });
    return out;
  }
  auto admit = [](int m) { return m % 5 == 1 || m % 5 == 4; };
  if (t == 1)
    return product_over(unit(N, K), N, admit, [&](int m) { return distinct_factor(m, N, K); });
  return product_over(ones_factor(N, K), N, [&](int m) { return m > 1 && admit(m); },
                      [&](int m) { return two_hook_factor(m, N, K); });
}

BivariateSeries bivariate_G(int j, int t, int N, int K) {
  check_jt(j, t, N);
  if (K < 0) K = default_x_cap('g', j, N);
  if (j == 1) {
    BivariateSeries out(N, K);
    auto add = [&](int n, const TruncatedSeries& term) { out.add_term(n, term); };
    if (t == 1) for_each_lg_term(N, add);
    else for_each_lg_shifted_term(N, add);
    return out;
  }
  if (t == 1)
    return product_over(unit(N, K), N, [](int m) { return m % 8 == 1 || m % 8 == 5 || m % 8 == 6; },
                        [&](int m) { return distinct_factor(m, N, K); });
  BivariateSeries acc = product_over(ones_factor(N, K), N, [](int m) { return m > 1 && m % 8 == 1; },
                                     [&](int m) { return two_hook_factor(m, N, K); });
  for (int a = 5; a <= N; a += 8) acc = bivariate_mul(acc, coupled_factor(a, a + 1, N, K));
  return acc;
}

TruncatedSeries identity_sum_side(Identity which, int N) {
  if (N < 0) throw std::invalid_argument("series order must be non-negative");
  TruncatedSeries out(N);
  if (which == Identity::RR1) {
    for_each_rr_term(N, [&](int n, const TruncatedSeries& inv, const TruncatedSeries&) {
      out += shifted(inv, n * n);
    });
  } else {
    for_each_lg_term(N, [&](int, const TruncatedSeries& term) { out += term; });
  }
  return out;
}

TruncatedSeries identity_product_side(Identity which, int N) {
  return which == Identity::RR1 ? rr_product(N) : lg_product(N);
}

IdentityReport identity_check_sum_product(Identity which, int N) {
  IdentityReport report;
  report.first_mismatch = first_discrepancy(identity_sum_side(which, N), identity_product_side(which, N));
  report.holds = !report.first_mismatch.has_value();
  return report;
}

}  // namespace hooklab
