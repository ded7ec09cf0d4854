#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kpg/series.hpp"

namespace kpg {

/// Weakly decreasing list of positive parts; the empty partition has weight 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Throws DomainError unless the parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  int weight() const noexcept;
  int length() const noexcept { return static_cast<int>(parts.size()); }

  auto operator<=>(const Partition&) const = default;
};

/// All partitions of n, largest first part first: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// "(2,1)"; "()" for the empty partition.
std::string to_string(const Partition& p);

/// Weight-n part of exp(sum_k p_k/k). n <= order.
TruncSeries schur_one_part(int n, int order = kDefaultOrder);

/// Jacobi–Trudi determinant det(s_{lambda_i - i + j}). |lambda| <= order.
TruncSeries schur_jacobi_trudi(const Partition& lambda, int order = kDefaultOrder);

/// sum_{n<=order} 2^{n(n-1)/2} s_n.
TruncSeries target_series(int order = kDefaultOrder);

/// Residual of one KP equation, exact through `reliable_weight`. Terms above
/// that weight are never reported.
struct KpResidual {
  TruncSeries residual;
  int reliable_weight;

  bool vanishes() const noexcept { return residual.is_zero(); }
};

/// F_22 - F_13 + (1/2) F_11^2 + (1/12) F_1111, where F_ij.. are partials in p.
/// Requires p-variables and order >= 4.
KpResidual kp1_residual(const TruncSeries& f);

/// F_23 - F_14 + F_11 F_12 + (1/6) F_1112. Requires p-variables and order >= 5.
KpResidual kp2_residual(const TruncSeries& f);

/// The four KP1 terms separately, each truncated to the reliable weight,
/// so that lhs == mixed - half_square - quartic_twelfth holds term by term.
struct Kp1Terms {
  TruncSeries lhs;              // F_22
  TruncSeries mixed;            // F_13
  TruncSeries half_square;      // (1/2) F_11^2
  TruncSeries quartic_twelfth;  // (1/12) F_1111
  int reliable_weight;
};

Kp1Terms kp1_terms(const TruncSeries& f);

/// Coefficients c_nu with tau = sum_nu c_nu s_nu for all |nu| <= order,
/// zero coefficients omitted. Requires p-variables.
std::map<Partition, Rational> schur_expand(const TruncSeries& tau);

/// sum_nu c_nu s_nu at the given order.
TruncSeries schur_combination(const std::map<Partition, Rational>& coeffs,
                              int order = kDefaultOrder);

}  // namespace kpg
