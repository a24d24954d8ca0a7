#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hooklab/asym.hpp"
#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

constexpr int kMaxSeriesTerms = 1'000'000;
constexpr int kMinOrder = -40;

cplx polylog_series(int s, cplx w) {
  cplx sum = 0;
  cplx power = w;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    const cplx term = power / std::pow(static_cast<double>(n), s);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    power *= w;
    if (power == 0.0) return sum;
  }
  throw numeric_domain_error("polylog series did not converge");
}

// Li_{-k}(w) = P_k(w) / (1 - w)^{k+1} with P_0 = w and
// P_{k+1} = w (1 - w) P_k' + (k + 1) w P_k.
cplx polylog_rational(int k, cplx w) {
  std::vector<double> p{0.0, 1.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i) {
      const double d = static_cast<double>(i) * p[i];  // coefficient of w^{i-1} in P'
      next[i] += d;
      next[i + 1] -= d;
    }
    for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] += static_cast<double>(j + 1) * p[i];
    p = std::move(next);
  }
  cplx numer = 0;
  for (std::size_t i = p.size(); i-- > 0;) numer = numer * w + p[i];
  return numer / std::pow(1.0 - w, k + 1);
}

const std::array<double, 21> kBernoulli = {
    1.0,
    -1.0 / 2,
    1.0 / 6,
    0.0,
    -1.0 / 30,
    0.0,
    1.0 / 42,
    0.0,
    -1.0 / 30,
    0.0,
    5.0 / 66,
    0.0,
    -691.0 / 2730,
    0.0,
    7.0 / 6,
    0.0,
    -3617.0 / 510,
    0.0,
    43867.0 / 798,
    0.0,
    -174611.0 / 330,
};

template <typename T>
T bernoulli_poly_impl(int r, T x) {
  if (r < 0 || r > 20) throw numeric_domain_error("Bernoulli index " + std::to_string(r) + " outside 0..20");
  // sum_k C(r,k) B_k x^{r-k}, evaluated by Horner in x.
  T acc = 0;
  double binom = 1;
  std::array<double, 21> coeff{};
  for (int k = 0; k <= r; ++k) {
    coeff[static_cast<std::size_t>(k)] = binom * kBernoulli[static_cast<std::size_t>(k)];
    binom = binom * (r - k) / (k + 1);
  }
  for (int k = 0; k <= r; ++k) acc = acc * x + coeff[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace

cplx polylog(int s, cplx w) {
  if (s > 2) throw numeric_domain_error("polylog order must be <= 2");
  if (s < kMinOrder) throw numeric_domain_error("polylog order below supported range");
  if (!(std::abs(w) < 1.0)) throw numeric_domain_error("polylog requires |w| < 1");
  if (w == 0.0) return 0.0;
  if (s >= 1) return polylog_series(s, w);
  return polylog_rational(-s, w);
}

double golden_dilog_identity_residual() {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double lphi = std::log(std::numbers::phi);
  const double li2 = polylog(2, 1.0 / std::numbers::phi).real();
  return std::abs(pi2 / 6 - li2 - pi2 / 15 - lphi * lphi);
}

double dilog_gollnitz_identity_check() {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double r = std::numbers::sqrt2 - 1;
  const double l = std::log(std::numbers::sqrt2 + 1);
  const double lhs = (polylog(2, r) - polylog(2, -r)).real();
  return std::abs(lhs - (pi2 / 8 - l * l / 2));
}

double bernoulli_number(int r) {
  if (r < 0 || r > 20) throw numeric_domain_error("Bernoulli index " + std::to_string(r) + " outside 0..20");
  return kBernoulli[static_cast<std::size_t>(r)];
}

double bernoulli_polynomial(int r, double x) { return bernoulli_poly_impl(r, x); }
cplx bernoulli_polynomial(int r, cplx x) { return bernoulli_poly_impl(r, x); }

}  // namespace hooklab
