#pragma once

#include <complex>
#include <string>

namespace hooklab {

using cplx = std::complex<double>;

/// z = epsilon (1 + i y) and q = e^{-z}.
class ComplexParam {
 public:
  ComplexParam(double epsilon, double y = 0.0);

  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] double y() const noexcept { return y_; }
  [[nodiscard]] cplx z() const noexcept { return {epsilon_, epsilon_ * y_}; }
  [[nodiscard]] cplx q() const { return std::exp(-z()); }

 private:
  double epsilon_;
  double y_;
};

/// A n^{-1/4} e^{B sqrt(n)}.
struct AsymModel {
  double amplitude = 0;
  double growth = 0;
  std::string label;

  [[nodiscard]] double log_value(double n) const;
  [[nodiscard]] double operator()(double n) const;
};

/// Li_s(w) for integer s <= 2 and |w| < 1. Throws numeric_domain_error
/// otherwise.
cplx polylog(int s, cplx w);

/// |pi^2/6 - Li2(1/phi) - pi^2/15 - log^2(phi)|.
double golden_dilog_identity_residual();
/// |Li2(sqrt2 - 1) - Li2(1 - sqrt2) - pi^2/8 + log^2(sqrt2 + 1)/2|.
double dilog_gollnitz_identity_check();

/// Bernoulli numbers B_0..B_20 (B_1 = -1/2).
double bernoulli_number(int r);
/// Bernoulli polynomial B_r(x), r <= 20.
double bernoulli_polynomial(int r, double x);
cplx bernoulli_polynomial(int r, cplx x);

/// Log((w e^{-nu z} q; q)_inf) by direct summation of
/// -sum_k a^k q^k / (k (1 - q^k)) with a = w e^{-nu z}.
cplx log_pochhammer_shifted_exact(cplx w, cplx nu, const ComplexParam& param);

/// The small-z expansion of the same logarithm through z^{R-2}:
///   -Li2(w)/z - (nu + 1/2) Log(1 - w) - nu^2 z w / (2 (1 - w))
///   - sum_{r=2}^{R-1} (B_r(-nu) - [r = 2] nu^2) Li_{2-r}(w) z^{r-1} / r!
cplx log_pochhammer_expansion(cplx w, cplx nu, cplx z, int R);

/// Exact value minus expansion; 2 <= R <= 8.
cplx lemma_zagier_residual(cplx w, cplx nu, const ComplexParam& param, int R = 5);

/// -Log((q;q)_inf) minus pi^2/(6z) + Log(z/(2 pi))/2 - z/24. Requires
/// |y| <= epsilon^{-1/4}.
cplx eta_asym_residual(const ComplexParam& param);

/// |sum_{n>=0} f(a + n step) - Euler-Maclaurin prediction with R
/// correction terms| for f(x) = e^{-x^2}. Requires Re(step) > 0, R >= 1.
double euler_maclaurin_gaussian_check(cplx a, cplx step, int R);

enum class SaddleVariant { RR, LG };

struct LambdaS {
  cplx lambda;
  double s = 0;
};
LambdaS lambda_s(double y, SaddleVariant variant);

/// Central second difference (s(h) - 2 s(0) + s(-h)) / (2 h^2), the
/// coefficient of y^2 in s.
double s_quadratic_coefficient(SaddleVariant variant, double h = 1e-3);

enum class ModelId { r11, r12, r21, r22, g11, g12, g21, g22 };
ModelId parse_model(const std::string& name);
std::string to_string(ModelId id);
AsymModel theorem_model(ModelId which);

enum class SaddleTarget { S11, H11, RRprod, LGprod };
SaddleTarget parse_saddle_target(const std::string& name);
std::string to_string(SaddleTarget t);

struct SaddleProbe {
  SaddleTarget target = SaddleTarget::S11;
  double epsilon = 0;
  double direct_value = 0;
  double main_term = 0;
  double ratio = 0;
  long terms = 0;
};

/// Direct binary64 evaluation at q = e^{-epsilon} against the leading
/// asymptotic term. Requires 0.003 <= epsilon <= 0.2.
SaddleProbe saddle_probe(SaddleTarget target, double epsilon);

/// Termwise sum of n q^{n^2}/(q;q)_n (S11) or
/// n q^{n^2+n} (-q^{-1};q^2)_n/(q^2;q^2)_n (H11) at q = e^{-epsilon}.
double nahm_sum_direct(SaddleTarget target, double epsilon, long* terms_used = nullptr);

enum class ProductTarget { RR14, RR23, LG };
/// Infinite product evaluated via its logarithm divided by its leading term.
double product_asym_probe(ProductTarget which, double epsilon);

}  // namespace hooklab
