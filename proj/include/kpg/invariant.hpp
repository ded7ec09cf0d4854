#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "kpg/census.hpp"
#include "kpg/graph.hpp"
#include "kpg/series.hpp"

namespace kpg {

enum class Invariant { W, A };

std::string_view invariant_name(Invariant which);
/// "W" or "A"; throws DomainError otherwise.
Invariant parse_invariant(std::string_view name);

/// Weighted chromatic polynomial by the edge-subset expansion
///   W_G = sum_{E' ⊆ E} (-1)^{|E'| - |V| + k(E')} prod_{components} q_{size}.
/// n <= 10, n <= order, at most 32 edges. W of the empty graph is 1.
TruncSeries weighted_chromatic_subset(const Graph& g, int order = kDefaultOrder,
                                      const CensusOptions& options = {});

/// Weighted chromatic polynomial by deletion-contraction on weighted graphs,
/// always splitting on the lowest present edge slot. An edgeless graph with
/// weights w_1..w_k maps to q_{w_1}···q_{w_k}. Total weight <= order, at most
/// 24 edges.
TruncSeries weighted_chromatic_dc(const WeightedGraph& wg, int order = kDefaultOrder);

/// Abel polynomial: sum over spanning forests of prod over trees T of |T|·q_{|T|}.
/// Isolated vertices are one-vertex trees. n <= 10, n <= order.
TruncSeries abel(const Graph& g, int order = kDefaultOrder);

/// W or A of g.
TruncSeries evaluate_invariant(Invariant which, const Graph& g, int order = kDefaultOrder);

/// Proper colourings of g with colours {1..k}, by exhaustive k^n scan.
/// n <= 8, k <= 8.
std::uint64_t chromatic_oracle(const Graph& g, int k);

/// Primitive coefficients b_G of an umbral invariant, keyed by canonical
/// connected graph. Disconnected graphs have b = 0 implicitly.
class UmbralCoefficients {
 public:
  /// Throws DomainError for a disconnected or empty graph.
  void set(const Graph& g, const Rational& b);
  /// b_G for connected g, nullopt when unset; 0 for disconnected g.
  std::optional<Rational> get(const Graph& g) const;
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::map<Graph, Rational> values_;
};

/// U_G = sum over set partitions of V of prod_blocks b_{G(V_a)} q_{|V_a|}.
/// Throws IncompleteCoefficientsError if a connected block has no b entry. n <= 7.
TruncSeries umbral_from_b(const Graph& g, const UmbralCoefficients& coeffs,
                          int order = kDefaultOrder);

/// Coefficient of q_n in the invariant of a connected n-vertex graph, i.e.
/// its primitive coefficient b_G. DomainError for disconnected input. n <= 7.
Rational extract_b(Invariant which, const Graph& g);

/// extract_b for every connected induced subgraph of g.
UmbralCoefficients collect_b(Invariant which, const Graph& g);

}  // namespace kpg
