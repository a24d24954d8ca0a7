#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hooklab/classes.hpp"
#include "hooklab/series.hpp"

namespace hooklab {

/// 1 / prod_{k >= 1, k mod modulus in residues} (1 - q^k), to order N.
/// Residues must be nonempty and lie in [1, modulus].
TruncatedSeries inv_pochhammer_product(const std::set<int>& residues, int modulus, int N);

/// (sum of sign * q^exponent) / (1 - q^period), to order N.
struct SignedExponent {
  int exponent = 0;
  int sign = 1;
};
TruncatedSeries rational_factor(const std::vector<SignedExponent>& numerator, int period, int N);

/// Generating function of the t-hook totals over R1 (j = 1) or R2 (j = 2),
/// t in {1, 2}: coefficient n is r_{j,t}(n).
TruncatedSeries series_S(int j, int t, int N);

/// Same over G1 (j = 1) or G2 (j = 2): coefficient n is g_{j,t}(n).
TruncatedSeries series_H(int j, int t, int N);

/// Which class a (family, j) pair refers to.
ClassId class_for(char family, int j);

/// Default x-degree caps: ceil(sqrt(N)) + 2 for the sum-side (Nahm-type)
/// refinements, N for the product-side ones.
int default_x_cap(char family, int j, int N);

/// sum over lambda in R_j of x^{#t-hooks(lambda)} q^{|lambda|}, built from
/// the closed sum/product forms, truncated at q^N and x^K. K < 0 selects
/// the default cap. Throws degree_overflow if K is too small.
BivariateSeries bivariate_R(int j, int t, int N, int K = -1);

/// Same over G_j.
BivariateSeries bivariate_G(int j, int t, int N, int K = -1);

/// The two sum-side/product-side identities checked coefficientwise.
enum class Identity { RR1, LG1 };

struct IdentityReport {
  bool holds = true;
  std::optional<Discrepancy> first_mismatch;
};

/// Sum side of the identity (Nahm-type sum), to order N.
TruncatedSeries identity_sum_side(Identity which, int N);
/// Product side, to order N.
TruncatedSeries identity_product_side(Identity which, int N);

IdentityReport identity_check_sum_product(Identity which, int N);

}  // namespace hooklab
