#include <doctest.h>

#include "kpg/error.hpp"
#include "kpg/hopf.hpp"
#include "support.hpp"

using namespace kpg;

namespace {

const Graph kEmpty{};
const Graph kDot(1);
const Graph kEdge(2, {{0, 1}});
const Graph kTriangle = Graph::complete(3);

Graph dots(int n) { return Graph(n); }

/// x ⊗ 1 + 1 ⊗ x extended linearly.
TensorSum primitive_shape(const GraphSum& s) {
  TensorSum t;
  for (const auto& [g, c] : s.terms()) {
    t.add(g, kEmpty, c);
    t.add(kEmpty, g, c);
  }
  return t;
}

}  // namespace

TEST_CASE("coproduct examples") {
  TensorSum dot;
  dot.add(kDot, kEmpty, 1);
  dot.add(kEmpty, kDot, 1);
  CHECK(coproduct(kDot) == dot);

  TensorSum edge;
  edge.add(kEdge, kEmpty, 1);
  edge.add(kEmpty, kEdge, 1);
  edge.add(kDot, kDot, 2);
  CHECK(coproduct(kEdge) == edge);

  TensorSum tri;
  tri.add(kTriangle, kEmpty, 1);
  tri.add(kEmpty, kTriangle, 1);
  tri.add(kEdge, kDot, 3);
  tri.add(kDot, kEdge, 3);
  CHECK(coproduct(kTriangle) == tri);
  CHECK(to_string(coproduct(kTriangle)) == "1 ? (x) Bw + 3 @ (x) A_ + 3 A_ (x) @ + 1 Bw (x) ?");
  CHECK_THROWS_AS(coproduct(Graph(9)), SizeError);
}

TEST_CASE("coproduct mass, grading and cocommutativity") {
  for (const Graph& g : testing::canonical_graphs_between(0, 5)) {
    const TensorSum t = coproduct(g);
    Rational mass = 0;
    for (const auto& [k, c] : t.terms()) {
      mass += c;
      CHECK(k.first.vertex_count() + k.second.vertex_count() == g.vertex_count());
    }
    CHECK(mass == Rational(pow2(static_cast<unsigned>(g.vertex_count()))));
    CHECK(t.flipped() == t);
  }
}

TEST_CASE("primitive projection examples") {
  CHECK(primitive_projection(kDot) == GraphSum::of(kDot));

  GraphSum edge = GraphSum::of(kEdge);
  edge.add(dots(2), -1);
  CHECK(primitive_projection(kEdge) == edge);

  // P3 over the five partitions of a 3-set: {012}: P3; three two-block
  // partitions give e+• twice and ••• once with coefficient -1; {0|1|2}: +2 •••.
  GraphSum p3 = GraphSum::of(Graph::path(3));
  p3.add(disjoint_union(kEdge, kDot), -2);
  p3.add(dots(3), 1);
  CHECK(primitive_projection(Graph::path(3)) == p3);
  CHECK_THROWS_AS(primitive_projection(Graph(8)), SizeError);
}

TEST_CASE("projections of connected graphs are primitive") {
  for (const Graph& g : testing::canonical_graphs_between(1, 5)) {
    if (!is_connected(g)) continue;
    const GraphSum pi = primitive_projection(g);
    CHECK(coproduct(pi) == primitive_shape(pi));
  }
}

TEST_CASE("projection kills decomposables") {
  const GraphSum product = GraphSum::of(kEdge) * GraphSum::of(kDot);
  CHECK(primitive_projection(product).is_zero());
  CHECK(primitive_projection(Graph(3)).is_zero());
}

TEST_CASE("expansion in primitives") {
  CHECK(to_string(expand_in_primitives(kDot)) == "1 pi(@)");
  CHECK(to_string(expand_in_primitives(kEdge)) == "1 pi(@) pi(@) + 1 pi(A_)");
  CHECK(to_string(expand_in_primitives(kTriangle)) ==
        "1 pi(@) pi(@) pi(@) + 3 pi(@) pi(A_) + 1 pi(Bw)");
  const PrimitiveExpansion e = expand_in_primitives(kTriangle);
  std::uint64_t total = 0;
  for (const auto& [blocks, count] : e.terms) total += count;
  CHECK(total == 5);
}

TEST_CASE("flattening the expansion recovers the graph") {
  for (const Graph& g : testing::canonical_graphs_between(0, 5)) {
    CHECK(flatten(expand_in_primitives(g)) == GraphSum::of(g));
  }
}

TEST_CASE("graph sums") {
  GraphSum s;
  s.add(Graph(3, {{0, 1}}), 2);
  s.add(Graph(3, {{1, 2}}), -2);
  CHECK(s.is_zero());
  CHECK(to_string(s) == "0");
  s.add(kEdge, make_rational(1, 2));
  s *= 4;
  CHECK(s.coefficient(kEdge) == 2);
  s *= 0;
  CHECK(s.is_zero());
  CHECK_THROWS_AS(GraphSum::of(Graph(5)) * GraphSum::of(Graph(4)), SizeError);
}
