#include "kpg/invariant.hpp"

#include <vector>

#include "kpg/error.hpp"

namespace kpg {

namespace {

void check_fits(const Graph& g, int order, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) {
    throw SizeError("graph has " + std::to_string(n) + " vertices, limit is " +
                    std::to_string(max_n));
  }
  if (n > order) {
    throw SizeError("graph on " + std::to_string(n) + " vertices needs truncation order >= " +
                    std::to_string(n));
  }
}

Monomial shape_monomial(const std::vector<int>& sizes) {
  Monomial m;
  for (int s : sizes) m = m * Monomial::variable(s);
  return m;
}

struct DeletionContraction {
  std::map<Monomial, long long> acc;

  void run(const WeightedGraph& wg) {
    const Graph& g = wg.graph();
    if (g.edge_count() == 0) {
      Monomial m;
      for (int w : wg.weights()) m = m * Monomial::variable(w);
      acc[m] += 1;
      return;
    }
    const Edge e = g.edge_list().front();
    run(WeightedGraph(g.without_edge(e.first, e.second), wg.weights()));
    run(contract_edge(wg, e));
  }
};

}  // namespace

std::string_view invariant_name(Invariant which) { return which == Invariant::W ? "W" : "A"; }

Invariant parse_invariant(std::string_view name) {
  if (name == "W") return Invariant::W;
  if (name == "A") return Invariant::A;
  throw DomainError("unknown invariant '" + std::string(name) + "' (expected W or A)");
}

TruncSeries weighted_chromatic_subset(const Graph& g, int order, const CensusOptions& options) {
  check_fits(g, order, 10);
  const int n = g.vertex_count();
  if (n == 0) return TruncSeries::constant(1, order);
  const ComponentCensus census = subset_census(g, options);
  TruncSeries w(order);
  for (const auto& row : census.rows) {
    const Monomial m = shape_monomial(row.sizes);
    const int k = static_cast<int>(row.sizes.size());
    BigInt coeff = 0;
    for (std::size_t e = 0; e < row.by_edges.size(); ++e) {
      const BigInt count(static_cast<unsigned long>(row.by_edges[e]));
      // (-1)^{|E'| - n + k}
      if ((static_cast<int>(e) - n + k) % 2 == 0) {
        coeff += count;
      } else {
        coeff -= count;
      }
    }
    w.add_term(m, Rational(coeff));
  }
  return w;
}

TruncSeries weighted_chromatic_dc(const WeightedGraph& wg, int order) {
  if (wg.total_weight() > order) {
    throw SizeError("total weight " + std::to_string(wg.total_weight()) +
                    " exceeds truncation order " + std::to_string(order));
  }
  if (wg.graph().edge_count() > 24) throw SizeError("deletion-contraction is limited to 24 edges");
  DeletionContraction dc;
  dc.run(wg);
  TruncSeries w(order);
  for (const auto& [m, c] : dc.acc) w.add_term(m, Rational(BigInt(static_cast<long>(c))));
  return w;
}

TruncSeries abel(const Graph& g, int order) {
  check_fits(g, order, 10);
  std::map<Monomial, BigInt> acc;
  const int n = g.vertex_count();
  for_each_spanning_forest(g, [&](EdgeMask forest) {
    Graph f(n, forest);
    Monomial m;
    long weight = 1;
    for (VertexSet tree : components(f)) {
      const int size = std::popcount(static_cast<unsigned>(tree));
      m = m * Monomial::variable(size);
      weight *= size;
    }
    acc[m] += weight;
  });
  TruncSeries a(order);
  for (const auto& [m, c] : acc) a.add_term(m, Rational(c));
  return a;
}

TruncSeries evaluate_invariant(Invariant which, const Graph& g, int order) {
  return which == Invariant::W ? weighted_chromatic_subset(g, order) : abel(g, order);
}

std::uint64_t chromatic_oracle(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n > 8) throw SizeError("chromatic_oracle supports at most 8 vertices");
  if (k < 0 || k > 8) throw SizeError("chromatic_oracle supports 0 <= k <= 8 colours");
  if (n == 0) return 1;
  if (k == 0) return 0;
  const auto edges = g.edge_list();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::uint64_t proper = 0;
  while (true) {
    bool ok = true;
    for (auto [a, b] : edges) {
      if (colour[a] == colour[b]) {
        ok = false;
        break;
      }
    }
    if (ok) ++proper;
    int v = 0;
    while (v < n && ++colour[v] == k) colour[v++] = 0;
    if (v == n) break;
  }
  return proper;
}

// ---------------------------------------------------------------------------
// Umbral reconstruction

void UmbralCoefficients::set(const Graph& g, const Rational& b) {
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw DomainError("umbral coefficients are attached to connected graphs only");
  }
  values_[canonical_form(g)] = b;
}

std::optional<Rational> UmbralCoefficients::get(const Graph& g) const {
  if (g.vertex_count() == 0 || !is_connected(g)) return Rational(0);
  auto it = values_.find(canonical_form(g));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

TruncSeries umbral_from_b(const Graph& g, const UmbralCoefficients& coeffs, int order) {
  check_fits(g, order, 7);
  const int n = g.vertex_count();
  // b of every induced subgraph; also enforces that all connected ones are present.
  std::vector<Rational> b(std::size_t{1} << n, 0);
  for (unsigned s = 1; s < (1u << n); ++s) {
    const Graph sub = g.induced(static_cast<VertexSet>(s));
    auto value = coeffs.get(sub);
    if (!value) {
      throw IncompleteCoefficientsError("no umbral coefficient for induced subgraph " +
                                        emit_graph6(canonical_form(sub)));
    }
    b[s] = *value;
  }
  TruncSeries u(order);
  for_each_set_partition(n, [&](const SetPartition& p) {
    Rational c = 1;
    Monomial m;
    for (VertexSet block : p.blocks) {
      c *= b[block];
      if (c == 0) return;
      m = m * Monomial::variable(std::popcount(static_cast<unsigned>(block)));
    }
    u.add_term(m, c);
  });
  return u;
}

Rational extract_b(Invariant which, const Graph& g) {
  const int n = g.vertex_count();
  if (n > 7) throw SizeError("extract_b supports at most 7 vertices");
  if (n == 0 || !is_connected(g)) throw DomainError("extract_b needs a connected graph");
  return evaluate_invariant(which, g, n).coefficient(Monomial::variable(n));
}

UmbralCoefficients collect_b(Invariant which, const Graph& g) {
  UmbralCoefficients out;
  const int n = g.vertex_count();
  for (unsigned s = 1; s < (1u << n); ++s) {
    const Graph sub = g.induced(static_cast<VertexSet>(s));
    if (is_connected(sub)) out.set(sub, extract_b(which, sub));
  }
  return out;
}

}  // namespace kpg
