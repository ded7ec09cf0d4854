#include "kpg/schur.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "kpg/error.hpp"

namespace kpg {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be nonincreasing");
  }
}

int Partition::weight() const noexcept {
  int w = 0;
  for (int x : parts) w += x;
  return w;
}

namespace {

void grow(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    grow(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw OrderMismatchError("truncation order " + std::to_string(order) + " outside 0.." +
                             std::to_string(kMaxOrder));
  }
}

/// s_0..s_order as homogeneous parts of one exponential.
std::vector<TruncSeries> one_part_table(int order) {
  check_order(order);
  TruncSeries gen(order, Variable::p);
  for (int k = 1; k <= order; ++k) gen.add_term(Monomial::variable(k), Rational(1, k));
  const TruncSeries all = exp(gen);
  std::vector<TruncSeries> table;
  for (int n = 0; n <= order; ++n) table.push_back(all.homogeneous_part(n));
  return table;
}

TruncSeries jacobi_trudi(const Partition& lambda, const std::vector<TruncSeries>& s, int order) {
  const int l = lambda.length();
  const TruncSeries zero(order, Variable::p);
  auto entry = [&](int i, int j) -> const TruncSeries& {
    const int idx = lambda.parts[static_cast<std::size_t>(i)] - i + j;
    return idx < 0 ? zero : s[static_cast<std::size_t>(idx)];
  };
  // Row-by-row Laplace expansion; dp[mask] sums signed products over
  // injections of the first popcount(mask) rows onto the columns in mask.
  std::vector<TruncSeries> dp(std::size_t{1} << l, zero);
  dp[0] = TruncSeries::constant(1, order, Variable::p);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    if (row == l) continue;
    for (int col = 0; col < l; ++col) {
      if (mask & (1u << col)) continue;
      const TruncSeries& a = entry(row, col);
      if (a.is_zero()) continue;
      TruncSeries term = dp[mask] * a;
      if (std::popcount(mask >> col) % 2 == 1) term = -term;
      dp[mask | (1u << col)] += term;
    }
  }
  return dp[(1u << l) - 1];
}

/// Gaussian elimination over the rationals; a is square and nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("Schur basis matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

Monomial power_sum_monomial(const Partition& p) {
  Monomial m;
  for (int x : p.parts) m = m * Monomial::variable(x);
  return m;
}

void require_p(const TruncSeries& f, const char* what) {
  if (f.variable() != Variable::p) {
    throw VariableMismatchError(std::string(what) + " expects a series in p-variables");
  }
}

TruncSeries d(const TruncSeries& f, std::initializer_list<int> vars) {
  TruncSeries r = f;
  for (int v : vars) r = partial(r, v).series;
  return r;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  grow(n, n, prefix, out);
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out + ")";
}

TruncSeries schur_one_part(int n, int order) {
  if (n < 0) throw DomainError("negative Schur index");
  if (n > order) throw OutOfTruncationError("s_" + std::to_string(n) + " exceeds truncation order");
  return one_part_table(order)[static_cast<std::size_t>(n)];
}

TruncSeries schur_jacobi_trudi(const Partition& lambda, int order) {
  if (lambda.weight() > order) {
    throw OutOfTruncationError("partition " + to_string(lambda) + " exceeds truncation order");
  }
  return jacobi_trudi(lambda, one_part_table(order), order);
}

TruncSeries target_series(int order) {
  const auto s = one_part_table(order);
  TruncSeries out(order, Variable::p);
  for (int n = 0; n <= order; ++n) {
    out += scale(s[static_cast<std::size_t>(n)],
                 Rational(pow2(static_cast<unsigned>(n * (n - 1) / 2))));
  }
  return out;
}

Kp1Terms kp1_terms(const TruncSeries& f) {
  require_p(f, "kp1_residual");
  if (f.order() < 4) throw SizeError("KP1 needs truncation order >= 4");
  const int reliable = f.order() - 4;
  const TruncSeries f11 = d(f, {1, 1});
  return {d(f, {2, 2}).truncated(reliable), d(f, {1, 3}).truncated(reliable),
          scale(f11 * f11, Rational(1, 2)).truncated(reliable),
          scale(d(f, {1, 1, 1, 1}), Rational(1, 12)).truncated(reliable), reliable};
}

KpResidual kp1_residual(const TruncSeries& f) {
  const Kp1Terms t = kp1_terms(f);
  return {t.lhs - t.mixed + t.half_square + t.quartic_twelfth, t.reliable_weight};
}

KpResidual kp2_residual(const TruncSeries& f) {
  require_p(f, "kp2_residual");
  if (f.order() < 5) throw SizeError("KP2 needs truncation order >= 5");
  const int reliable = f.order() - 5;
  TruncSeries r = d(f, {2, 3}) - d(f, {1, 4}) + d(f, {1, 1}) * d(f, {1, 2}) +
                  scale(d(f, {1, 1, 1, 2}), Rational(1, 6));
  return {r.truncated(reliable), reliable};
}

std::map<Partition, Rational> schur_expand(const TruncSeries& tau) {
  require_p(tau, "schur_expand");
  const int order = tau.order();
  const auto s = one_part_table(order);
  std::map<Partition, Rational> out;
  for (int w = 0; w <= order; ++w) {
    const TruncSeries part = tau.homogeneous_part(w);
    if (part.is_zero()) continue;
    const auto basis = partitions_of(w);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < basis.size(); ++i) row_of[power_sum_monomial(basis[i])] = i;
    std::vector<std::vector<Rational>> a(basis.size(), std::vector<Rational>(basis.size(), 0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const TruncSeries image = jacobi_trudi(basis[j], s, order);
      for (const auto& [m, c] : image.terms()) a[row_of.at(m)][j] = c;
    }
    std::vector<Rational> b(basis.size(), 0);
    for (const auto& [m, c] : part.terms()) b[row_of.at(m)] = c;
    const auto x = solve(std::move(a), std::move(b));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (x[j] != 0) out.emplace(basis[j], x[j]);
    }
  }
  return out;
}

TruncSeries schur_combination(const std::map<Partition, Rational>& coeffs, int order) {
  const auto s = one_part_table(order);
  TruncSeries out(order, Variable::p);
  for (const auto& [lambda, c] : coeffs) {
    if (lambda.weight() > order) {
      throw OutOfTruncationError("partition " + to_string(lambda) + " exceeds truncation order");
    }
    out += scale(jacobi_trudi(lambda, s, order), c);
  }
  return out;
}

}  // namespace kpg
