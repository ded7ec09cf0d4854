#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kpg/graph.hpp"
#include "kpg/rational.hpp"

namespace kpg {

/// Finite rational combination of graphs. Keys are canonical forms
/// (canonicalized at insertion) and no coefficient is zero, so equality of
/// Hopf identities is plain map equality.
class GraphSum {
 public:
  using Terms = std::map<Graph, Rational>;

  GraphSum() = default;
  static GraphSum of(const Graph& g, const Rational& c = 1);

  void add(const Graph& g, const Rational& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Graph& g) const;

  GraphSum& operator+=(const GraphSum& other);
  GraphSum& operator*=(const Rational& c);
  bool operator==(const GraphSum&) const = default;

 private:
  Terms terms_;
};

/// Finite rational combination of ordered pairs of canonical graphs.
class TensorSum {
 public:
  using Key = std::pair<Graph, Graph>;
  using Terms = std::map<Key, Rational>;

  void add(const Graph& left, const Graph& right, const Rational& c);
  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const Graph& left, const Graph& right) const;
  /// Swaps the tensor factors.
  TensorSum flipped() const;

  TensorSum& operator+=(const TensorSum& other);
  bool operator==(const TensorSum&) const = default;

 private:
  Terms terms_;
};

/// Disjoint-union product extended bilinearly.
GraphSum operator*(const GraphSum& a, const GraphSum& b);

/// Sum over ordered splits V = V1 ⊔ V2 of G(V1) ⊗ G(V2), the empty graph as
/// unit. n <= 8.
TensorSum coproduct(const Graph& g);
TensorSum coproduct(const GraphSum& s);

/// Projection onto primitives along decomposables: sum over set partitions B
/// of (-1)^{|B|-1}(|B|-1)! times g with all inter-block edges removed. n <= 7.
GraphSum primitive_projection(const Graph& g);
GraphSum primitive_projection(const GraphSum& s);

/// g written as a polynomial in primitives: one entry per multiset of block
/// graphs {G(V_b)}, counting the set partitions that produce it. The entry
/// stands for prod_b pi(G(V_b)).
struct PrimitiveExpansion {
  /// Sorted canonical block graphs -> number of partitions.
  std::map<std::vector<Graph>, std::uint64_t> terms;
};

PrimitiveExpansion expand_in_primitives(const Graph& g);

/// Substitutes primitive_projection for every factor and multiplies out.
GraphSum flatten(const PrimitiveExpansion& e);

/// Debug rendering, one "coefficient graph6" (or "coefficient left ⊗ right")
/// entry per term in lexicographic graph6 order, joined by " + ".
std::string to_string(const GraphSum& s);
std::string to_string(const TensorSum& s);
std::string to_string(const PrimitiveExpansion& e);

}  // namespace kpg
