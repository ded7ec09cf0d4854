#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpg/rational.hpp"

namespace kpg {

/// Highest variable index a monomial can carry, and the highest truncation
/// order a series accepts. Generating-function assembly is capped lower
/// (see ensemble.hpp).
inline constexpr int kMaxVariable = 12;
inline constexpr int kMaxOrder = 12;
inline constexpr int kDefaultOrder = 7;

enum class Variable : char { q = 'q', p = 'p' };

/// Product of powers of the graded variables x_1..x_12, wt(x_i) = i.
///
/// Ordering is the canonical printing order: ascending weight, then exponent
/// vectors compared from the highest index down with smaller first, so
/// q1^3 < q1 q2 < q3 and q1^2 q2 < q2^2 < q1 q3 < q4.
class Monomial {
 public:
  Monomial() = default;

  /// {{index, exponent}, ...}; zero exponents are ignored.
  Monomial(std::initializer_list<std::pair<int, int>> powers);

  static Monomial variable(int index, int exponent = 1);

  /// Exponent of x_index (0 when absent).
  int exponent(int index) const;
  int weight() const noexcept { return weight_; }
  int degree() const noexcept;
  bool is_one() const noexcept { return weight_ == 0; }
  /// Largest index with a nonzero exponent, 0 for the unit monomial.
  int max_index() const noexcept;

  Monomial operator*(const Monomial& other) const;

  /// Exponents in index order 1..max_index().
  std::vector<int> exponents() const;

  bool operator==(const Monomial&) const = default;
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxVariable> exps_{};
  int weight_ = 0;

  void set(int index, int exponent);
};

struct RescalePlan;

/// Sparse multivariate polynomial with exact rational coefficients, truncated
/// at weighted degree `order`: every stored monomial has weight <= order and
/// no stored coefficient is zero. The zero series is the empty term map.
class TruncSeries {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit TruncSeries(int order = kDefaultOrder, Variable var = Variable::q);

  static TruncSeries constant(const Rational& c, int order = kDefaultOrder,
                              Variable var = Variable::q);
  static TruncSeries monomial(const Monomial& m, const Rational& c = 1,
                              int order = kDefaultOrder, Variable var = Variable::q);
  /// x_index, the variable itself.
  static TruncSeries gen(int index, int order = kDefaultOrder, Variable var = Variable::q);

  int order() const noexcept { return order_; }
  Variable variable() const noexcept { return var_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c·m; silently drops monomials above the truncation order.
  void add_term(const Monomial& m, const Rational& c);

  /// Stored coefficient of m, or 0. Throws OutOfTruncationError when wt(m) > order.
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Terms of weight exactly w.
  TruncSeries homogeneous_part(int w) const;
  /// Terms of weight <= w (order unchanged).
  TruncSeries truncated(int w) const;
  /// Same terms, new truncation order (terms above it are dropped).
  TruncSeries with_order(int order) const;
  /// Same terms, relabelled variable family.
  TruncSeries with_variable(Variable var) const;

  /// Value at x_i = values[i-1]; missing values count as 0.
  Rational evaluate(std::span<const Rational> values) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& c);

  bool operator==(const TruncSeries&) const = default;

 private:
  int order_;
  Variable var_;
  Terms terms_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
/// Truncated product; terms of weight above the order are discarded.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const TruncSeries& a, const Rational& c);
TruncSeries pow(const TruncSeries& a, unsigned k);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }
inline TruncSeries operator*(const Rational& c, const TruncSeries& a) { return scale(a, c); }

/// sum_{k<=N} a^k/k!. Requires a zero constant term (DomainError otherwise).
TruncSeries exp(const TruncSeries& a);
/// sum_{k=1..N} (-1)^{k+1}(a-1)^k/k. Requires constant term 1 (DomainError otherwise).
TruncSeries log(const TruncSeries& a);

/// Per-variable rescaling x_n -> factor_n · y_n.
struct RescalePlan {
  std::map<int, Rational> factors;
  /// Family of the substituted variables.
  Variable target = Variable::p;
  /// Free-form provenance label ("W", "A", ...).
  std::string source;
};

/// Maps every monomial prod x_i^{e_i} to (prod factor_i^{e_i}) prod y_i^{e_i}.
/// Throws RescaleError if a variable present in `a` has no factor or a zero factor.
TruncSeries substitute(const TruncSeries& a, const RescalePlan& plan);

/// Result of differentiation. Terms of weight above `reliable_weight` may be
/// incomplete because their antiderivatives lay beyond the truncation order;
/// the series itself is never padded, so callers apply this bound.
struct Derivative {
  TruncSeries series;
  int reliable_weight;
};

/// d^times a / d x_var^times. Reliable through weight order - times·var.
Derivative partial(const TruncSeries& a, int var, int times = 1);

/// Canonical one-line rendering, e.g. "q1^3 + 3 q1 q2 + 2 q3"; "0" for zero.
std::string to_string(const TruncSeries& a);
std::string to_string(const Monomial& m, Variable var);

}  // namespace kpg
