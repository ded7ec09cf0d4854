#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "kpg/graph.hpp"
#include "kpg/series.hpp"

namespace kpg::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'2024ULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small nonzero-denominator rational with numerator in [-9, 9].
inline Rational random_rational(bool nonzero = false) {
  int num = 0;
  do {
    num = uniform(-9, 9);
  } while (nonzero && num == 0);
  return make_rational(num, uniform(1, 6));
}

/// Monomial of weight between `min_weight` and `max_weight`.
inline Monomial random_monomial(int min_weight, int max_weight) {
  const int target = uniform(min_weight, max_weight);
  Monomial m;
  int remaining = target;
  while (remaining > 0) {
    const int i = uniform(1, remaining);
    m = m * Monomial::variable(i);
    remaining -= i;
  }
  return m;
}

/// Up to `terms` random terms of weight 1..order, plus an optional constant.
inline TruncSeries random_series(int order, int terms, Variable var = Variable::q,
                                 std::optional<Rational> constant = std::nullopt) {
  TruncSeries s(order, var);
  for (int t = 0; t < terms; ++t) s.add_term(random_monomial(1, order), random_rational());
  if (constant) s.add_term(Monomial{}, *constant - s.constant_term());
  return s;
}

inline std::vector<int> random_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline Graph random_graph(int n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng())) g = g.with_edge(i, j);
    }
  }
  return g;
}

/// Every labelled graph on n vertices (n <= 5 keeps this small).
inline std::vector<Graph> all_labelled_graphs(int n) {
  const int slots = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1ul << slots); ++mask) out.emplace_back(n, EdgeMask{mask});
  return out;
}

/// Canonical representatives for every n in [lo, hi].
inline std::vector<Graph> canonical_graphs_between(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = canonical_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace kpg::testing
