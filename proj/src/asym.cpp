#include "hooklab/asym.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
const double kLogPhi = std::log(std::numbers::phi);
const double kLogSilver = std::log(std::numbers::sqrt2 + 1);

// Compensated (Neumaier) complex accumulator.
class KahanSum {
 public:
  void add(cplx x) {
    re_ = add_part(re_, c_re_, x.real());
    im_ = add_part(im_, c_im_, x.imag());
  }
  [[nodiscard]] cplx value() const { return {re_ + c_re_, im_ + c_im_}; }

 private:
  static double add_part(double sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
    else comp += (x - t) + sum;
    return t;
  }
  double re_ = 0, im_ = 0, c_re_ = 0, c_im_ = 0;
};

// e^u - 1 without cancellation for small |u|.
cplx expm1c(cplx u) {
  const double x = u.real();
  const double y = u.imag();
  const double s = std::sin(y / 2);
  return {std::expm1(x) * std::cos(y) - 2 * s * s, std::exp(x) * std::sin(y)};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

void check_probe_range(double epsilon) {
  if (!(epsilon >= 0.003 && epsilon <= 0.2))
    throw numeric_domain_error("epsilon must lie in [0.003, 0.2]");
}

double log_main_term(SaddleTarget target, double epsilon) {
  const double phi = std::numbers::phi;
  switch (target) {
    case SaddleTarget::S11:
      return std::log(std::sqrt(phi) / std::pow(5.0, 0.25) * kLogPhi / epsilon) + kPi2 / (15 * epsilon);
    case SaddleTarget::H11:
      return std::log(kLogSilver / std::pow(2.0, 1.25) / epsilon) + kPi2 / (16 * epsilon);
    case SaddleTarget::RRprod:
      return std::log(std::sqrt(phi) / std::pow(5.0, 0.25)) + kPi2 / (15 * epsilon);
    case SaddleTarget::LGprod:
      return std::log(std::pow(2.0, -0.25)) + kPi2 / (16 * epsilon);
  }
  throw std::invalid_argument("unknown saddle target");
}

// log of 1/prod_{m mod modulus in residues} (1 - e^{-m epsilon}), keeping
// factors with m epsilon <= 50 + log(1/epsilon).
double log_inverse_product(std::initializer_list<int> residues, int modulus, double epsilon) {
  const double cutoff = 50 + std::log(1 / epsilon);
  KahanSum sum;
  for (long m = 1; static_cast<double>(m) * epsilon <= cutoff; ++m) {
    const long r = m % modulus;
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) continue;
    sum.add(-std::log1p(-std::exp(-static_cast<double>(m) * epsilon)));
  }
  return sum.value().real();
}

}  // namespace

ComplexParam::ComplexParam(double epsilon, double y) : epsilon_(epsilon), y_(y) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw numeric_domain_error("epsilon must be positive");
  if (!std::isfinite(y)) throw numeric_domain_error("y must be finite");
}

double AsymModel::log_value(double n) const {
  return std::log(amplitude) - 0.25 * std::log(n) + growth * std::sqrt(n);
}

double AsymModel::operator()(double n) const { return std::exp(log_value(n)); }

cplx log_pochhammer_shifted_exact(cplx w, cplx nu, const ComplexParam& param) {
  if (!(std::abs(w) < 1)) throw numeric_domain_error("requires |w| < 1");
  if (w == 0.0) return 0.0;
  const cplx z = param.z();
  const cplx x = w * std::exp(-nu * z) * param.q();
  if (!(std::abs(x) < 1)) throw numeric_domain_error("shifted base has modulus >= 1; series diverges");
  KahanSum sum;
  cplx power = 1;
  for (long k = 1; k <= 10'000'000; ++k) {
    power *= x;
    const cplx term = power / (static_cast<double>(k) * -expm1c(-static_cast<double>(k) * z));
    sum.add(-term);
    if (std::abs(term) < 1e-19 * std::abs(sum.value())) return sum.value();
  }
  throw numeric_domain_error("shifted Pochhammer logarithm did not converge");
}

cplx log_pochhammer_expansion(cplx w, cplx nu, cplx z, int R) {
  if (R < 2 || R > 8) throw std::invalid_argument("expansion order R must lie in 2..8");
  cplx out = -polylog(2, w) / z - (nu + 0.5) * std::log(1.0 - w) - nu * nu * z * w / (2.0 * (1.0 - w));
  double factorial = 1;
  for (int r = 2; r <= R - 1; ++r) {
    factorial *= r;
    cplx b = bernoulli_polynomial(r, -nu);
    if (r == 2) b -= nu * nu;
    out -= b * polylog(2 - r, w) * std::pow(z, r - 1) / factorial;
  }
  return out;
}

cplx lemma_zagier_residual(cplx w, cplx nu, const ComplexParam& param, int R) {
  if (R < 2 || R > 8) throw std::invalid_argument("expansion order R must lie in 2..8");
  if (w == 0.0) return 0.0;
  return log_pochhammer_shifted_exact(w, nu, param) - log_pochhammer_expansion(w, nu, param.z(), R);
}

cplx eta_asym_residual(const ComplexParam& param) {
  if (std::abs(param.y()) > std::pow(param.epsilon(), -0.25))
    throw numeric_domain_error("|y| exceeds epsilon^{-1/4}");
  const cplx z = param.z();
  KahanSum sum;
  for (long k = 1;; ++k) {
    const double kd = static_cast<double>(k);
    const cplx term = 1.0 / (kd * expm1c(kd * z));
    sum.add(term);
    if (kd * param.epsilon() > 60 && std::abs(term) < 1e-22 * std::abs(sum.value())) break;
  }
  const cplx expansion = kPi2 / (6.0 * z) + 0.5 * std::log(z / (2 * kPi)) - z / 24.0;
  return sum.value() - expansion;
}

double euler_maclaurin_gaussian_check(cplx a, cplx step, int R) {
  if (!(step.real() > 0)) throw std::invalid_argument("step must have positive real part");
  if (R < 1 || 2 * R > 20) throw std::invalid_argument("R must lie in 1..10");
  auto f = [](cplx x) { return std::exp(-x * x); };

  KahanSum direct;
  for (long n = 0; n < 100'000'000; ++n) {
    const cplx x = a + static_cast<double>(n) * step;
    const cplx x2 = x * x;
    direct.add(f(x));
    if (x2.real() > 750 && (x * step).real() > 0) break;
  }

  cplx integral;
  if (a.imag() == 0 && step.imag() == 0) {
    integral = std::sqrt(kPi) / 2 * std::erfc(a.real()) / step.real();
  } else {
    boost::math::quadrature::exp_sinh<double> quad;
    const double re = quad.integrate([&](double t) { return f(a + step * t).real(); });
    const double im = quad.integrate([&](double t) { return f(a + step * t).imag(); });
    integral = {re, im};
  }

  // f^{(k)}(x) = (-1)^k H_k(x) e^{-x^2} with physicists' Hermite H_k.
  std::vector<cplx> hermite{1.0, 2.0 * a};
  for (int k = 1; k < 2 * R; ++k)
    hermite.push_back(2.0 * a * hermite[static_cast<std::size_t>(k)] - 2.0 * k * hermite[static_cast<std::size_t>(k - 1)]);

  cplx prediction = integral + f(a) / 2.0;
  double factorial = 1;
  for (int r = 1; r <= R; ++r) {
    factorial *= (2 * r - 1) * (2 * r);
    const cplx deriv = -hermite[static_cast<std::size_t>(2 * r - 1)] * f(a);
    prediction -= bernoulli_number(2 * r) * std::pow(step, 2 * r - 1) * deriv / factorial;
  }
  return std::abs(direct.value() - prediction);
}

LambdaS lambda_s(double y, SaddleVariant variant) {
  if (!std::isfinite(y)) throw numeric_domain_error("y must be finite");
  const cplx c{1.0, y};
  LambdaS out;
  if (variant == SaddleVariant::RR) {
    const cplx w = std::exp(-c * kLogPhi);
    out.lambda = kPi2 / 6 - kLogPhi * kLogPhi * c * c - polylog(2, w);
    out.s = (out.lambda / c - kPi2 / 15).real();
  } else {
    const cplx w = std::exp(c * std::log(std::numbers::sqrt2 - 1));
    out.lambda = kPi2 / 4 - polylog(2, w) + polylog(2, -w) - 0.5 * c * c * kLogSilver * kLogSilver;
    out.s = (out.lambda / (2.0 * c) - kPi2 / 16).real();
  }
  return out;
}

double s_quadratic_coefficient(SaddleVariant variant, double h) {
  const double s0 = lambda_s(0, variant).s;
  return (lambda_s(h, variant).s - 2 * s0 + lambda_s(-h, variant).s) / (2 * h * h);
}

ModelId parse_model(const std::string& name) {
  const std::string s = lower(name);
  static const std::pair<const char*, ModelId> table[] = {
      {"r11", ModelId::r11}, {"r12", ModelId::r12}, {"r21", ModelId::r21}, {"r22", ModelId::r22},
      {"g11", ModelId::g11}, {"g12", ModelId::g12}, {"g21", ModelId::g21}, {"g22", ModelId::g22}};
  for (const auto& [label, id] : table)
    if (s == label) return id;
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::string to_string(ModelId id) {
  static const char* names[] = {"r11", "r12", "r21", "r22", "g11", "g12", "g21", "g22"};
  return names[static_cast<int>(id)];
}

AsymModel theorem_model(ModelId which) {
  const double sqrt_phi = std::sqrt(std::numbers::phi);
  const double b_rr = 2 * kPi / std::sqrt(15.0);
  const double b_lg = kPi / 2;
  AsymModel m;
  m.label = to_string(which);
  switch (which) {
    case ModelId::r11:
    case ModelId::r12:
      m.amplitude = std::pow(3.0, 0.25) * sqrt_phi * kLogPhi / (2 * kPi);
      m.growth = b_rr;
      break;
    case ModelId::r21:
      m.amplitude = std::pow(3.0, 0.25) * sqrt_phi / (5 * kPi);
      m.growth = b_rr;
      break;
    case ModelId::r22:
      m.amplitude = std::pow(3.0, 1.25) * sqrt_phi / (10 * kPi);
      m.growth = b_rr;
      break;
    case ModelId::g11:
    case ModelId::g12:
      m.amplitude = kLogSilver / (std::pow(2.0, 1.25) * kPi);
      m.growth = b_lg;
      break;
    case ModelId::g21:
      m.amplitude = 3 / (std::pow(2.0, 3.25) * kPi);
      m.growth = b_lg;
      break;
    case ModelId::g22:
      m.amplitude = 1 / (std::pow(2.0, 1.25) * kPi);
      m.growth = b_lg;
      break;
  }
  return m;
}

SaddleTarget parse_saddle_target(const std::string& name) {
  const std::string s = lower(name);
  if (s == "s11") return SaddleTarget::S11;
  if (s == "h11") return SaddleTarget::H11;
  if (s == "rrprod") return SaddleTarget::RRprod;
  if (s == "lgprod") return SaddleTarget::LGprod;
  throw std::invalid_argument("unknown saddle target '" + name + "'");
}

std::string to_string(SaddleTarget t) {
  switch (t) {
    case SaddleTarget::S11: return "S11";
    case SaddleTarget::H11: return "H11";
    case SaddleTarget::RRprod: return "RRprod";
    case SaddleTarget::LGprod: return "LGprod";
  }
  return "?";
}

double nahm_sum_direct(SaddleTarget target, double epsilon, long* terms_used) {
  if (target != SaddleTarget::S11 && target != SaddleTarget::H11)
    throw std::invalid_argument("direct Nahm sum is defined for S11 and H11 only");
  if (!(epsilon > 0)) throw numeric_domain_error("epsilon must be positive");
  const bool rr = target == SaddleTarget::S11;
  // Terms peak where q^n = 1/phi (S11) or q^{2n} = sqrt2 - 1 (H11).
  const double peak = rr ? kLogPhi / epsilon : kLogSilver / (2 * epsilon);
  const long cap = std::max<long>(10, static_cast<long>(std::ceil(10 * peak)));
  double term = 1;  // the n = 0 summand without its factor n
  KahanSum sum;
  for (long n = 1; n <= cap; ++n) {
    const double nd = static_cast<double>(n);
    if (rr) {
      term *= std::exp(-(2 * nd - 1) * epsilon) / -std::expm1(-nd * epsilon);
    } else {
      term *= std::exp(-2 * nd * epsilon) * (1 + std::exp(-(2 * nd - 3) * epsilon)) / -std::expm1(-2 * nd * epsilon);
    }
    const double summand = nd * term;
    sum.add(summand);
    if (nd > peak && summand < 1e-18 * sum.value().real()) {
      if (terms_used) *terms_used = n;
      return sum.value().real();
    }
  }
  throw numeric_domain_error("Nahm sum did not converge within the term cap");
}

SaddleProbe saddle_probe(SaddleTarget target, double epsilon) {
  check_probe_range(epsilon);
  SaddleProbe probe;
  probe.target = target;
  probe.epsilon = epsilon;
  double log_direct = 0;
  switch (target) {
    case SaddleTarget::S11:
    case SaddleTarget::H11:
      log_direct = std::log(nahm_sum_direct(target, epsilon, &probe.terms));
      break;
    case SaddleTarget::RRprod:
      log_direct = log_inverse_product({1, 4}, 5, epsilon);
      break;
    case SaddleTarget::LGprod:
      log_direct = log_inverse_product({1, 5, 6}, 8, epsilon);
      break;
  }
  const double log_main = log_main_term(target, epsilon);
  probe.direct_value = std::exp(log_direct);
  probe.main_term = std::exp(log_main);
  probe.ratio = std::exp(log_direct - log_main);
  return probe;
}

double product_asym_probe(ProductTarget which, double epsilon) {
  check_probe_range(epsilon);
  switch (which) {
    case ProductTarget::RR14:
      return saddle_probe(SaddleTarget::RRprod, epsilon).ratio;
    case ProductTarget::LG:
      return saddle_probe(SaddleTarget::LGprod, epsilon).ratio;
    case ProductTarget::RR23: {
      const double log_main =
          std::log(1 / (std::pow(5.0, 0.25) * std::sqrt(std::numbers::phi))) + kPi2 / (15 * epsilon);
      return std::exp(log_inverse_product({2, 3}, 5, epsilon) - log_main);
    }
  }
  throw std::invalid_argument("unknown product target");
}

}  // namespace hooklab
