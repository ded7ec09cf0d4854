#include "kpg/ensemble.hpp"

#include "kpg/error.hpp"

namespace kpg {

namespace {

void check_k(int k, int order) {
  if (k < 1 || k > kMaxEnsembleOrder) {
    throw SizeError("ensemble weight " + std::to_string(k) + " outside 1.." +
                    std::to_string(kMaxEnsembleOrder));
  }
  if (k > order) throw SizeError("ensemble weight exceeds truncation order");
}

unsigned pairs(int k) { return static_cast<unsigned>(k * (k - 1) / 2); }

}  // namespace

TruncSeries ensemble_w(int k, int order, const CensusOptions& options) {
  check_k(k, order);
  const ComponentCensus census = subset_census(Graph::complete(k), options);
  const unsigned slots = pairs(k);
  TruncSeries out(order);
  for (const auto& row : census.rows) {
    Monomial m;
    for (int s : row.sizes) m = m * Monomial::variable(s);
    const int c = static_cast<int>(row.sizes.size());
    BigInt coeff = 0;
    for (std::size_t e = 0; e < row.by_edges.size(); ++e) {
      if (row.by_edges[e] == 0) continue;
      // Each E' lies in 2^{C(k,2)-|E'|} edge sets E ⊆ E(K_k).
      BigInt term = BigInt(static_cast<unsigned long>(row.by_edges[e])) *
                    pow2(slots - static_cast<unsigned>(e));
      if ((static_cast<int>(e) - k + c) % 2 == 0) {
        coeff += term;
      } else {
        coeff -= term;
      }
    }
    out.add_term(m, Rational(coeff) / Rational(factorial(static_cast<unsigned>(k))));
  }
  return out;
}

TruncSeries ensemble_a(int k, int order) {
  check_k(k, order);
  const Graph kk = Graph::complete(k);
  const unsigned slots = pairs(k);
  std::map<Monomial, BigInt> acc;
  for_each_spanning_forest(kk, [&](EdgeMask forest) {
    Monomial m;
    unsigned long roots = 1;
    for (VertexSet tree : components(Graph(k, forest))) {
      const int size = std::popcount(static_cast<unsigned>(tree));
      m = m * Monomial::variable(size);
      roots *= static_cast<unsigned long>(size);
    }
    acc[m] += BigInt(roots) * pow2(slots - static_cast<unsigned>(popcount(forest)));
  });
  TruncSeries out(order);
  const Rational norm = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
  for (const auto& [m, c] : acc) out.add_term(m, Rational(c) * norm);
  return out;
}

TruncSeries ensemble(Invariant which, int k, int order, const CensusOptions& options) {
  return which == Invariant::W ? ensemble_w(k, order, options) : ensemble_a(k, order);
}

TruncSeries full_series(Invariant which, int order, const CensusOptions& options) {
  if (order > kMaxEnsembleOrder) {
    throw SizeError("generating functions are assembled up to order " +
                    std::to_string(kMaxEnsembleOrder));
  }
  TruncSeries out = TruncSeries::constant(1, order);
  for (int k = 1; k <= order; ++k) out += ensemble(which, k, order, options);
  return out;
}

TruncSeries connected_part(const TruncSeries& full) { return log(full); }

TruncSeries iso_class_series(Invariant which, int k, int order) {
  if (k < 0 || k > kMaxIsoClassOrder) {
    throw SizeError("iso-class enumeration is capped at " + std::to_string(kMaxIsoClassOrder) +
                    " vertices");
  }
  TruncSeries out(order);
  for (const Graph& g : canonical_graphs(k)) {
    TruncSeries term = evaluate_invariant(which, g, order);
    term *= Rational(1) / Rational(BigInt(static_cast<unsigned long>(aut_order(g))));
    out += term;
  }
  return out;
}

ConstantsTable rescale_constants(Invariant which, int max_n, const CensusOptions& options) {
  if (max_n < 1 || max_n > kMaxEnsembleOrder) {
    throw SizeError("rescaling constants are available for 1 <= n <= " +
                    std::to_string(kMaxEnsembleOrder));
  }
  ConstantsTable table{which, {}};
  for (int n = 1; n <= max_n; ++n) {
    const TruncSeries part = ensemble(which, n, n, options);
    table.values.push_back(part.coefficient(Monomial::variable(n)) *
                           Rational(factorial(static_cast<unsigned>(n))));
  }
  return table;
}

ConstantsTable constants_from_series(Invariant which, const TruncSeries& full, int max_n) {
  if (max_n < 1 || max_n > full.order()) throw SizeError("constants requested beyond the series order");
  ConstantsTable table{which, {}};
  for (int n = 1; n <= max_n; ++n) {
    table.values.push_back(full.coefficient(Monomial::variable(n)) *
                           Rational(factorial(static_cast<unsigned>(n))));
  }
  return table;
}

RescalePlan make_plan(const ConstantsTable& table) {
  RescalePlan plan;
  plan.target = Variable::p;
  plan.source = std::string(invariant_name(table.source));
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const auto n = static_cast<unsigned>(i + 1);
    if (table.values[i] == 0) {
      throw DegeneratePlanError("rescaling constant i_" + std::to_string(n) + " is zero");
    }
    plan.factors[static_cast<int>(n)] =
        Rational(pow2(n * (n - 1) / 2) * factorial(n - 1)) / table.values[i];
  }
  return plan;
}

TruncSeries rescaled_connected_series(Invariant which, int order, const CensusOptions& options) {
  const TruncSeries full = full_series(which, order, options);
  const RescalePlan plan = make_plan(constants_from_series(which, full, order));
  return substitute(connected_part(full), plan);
}

}  // namespace kpg
