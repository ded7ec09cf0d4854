#include <doctest.h>

#include "kpg/error.hpp"
#include "kpg/invariant.hpp"
#include "support.hpp"

using namespace kpg;

namespace {

const Graph kEdge(2, {{0, 1}});

std::string w(const Graph& g) { return to_string(weighted_chromatic_subset(g)); }
std::string a(const Graph& g) { return to_string(abel(g)); }

/// Value of the invariant at q_i = x_i + y_i.
Rational shifted_value(const TruncSeries& f, const std::vector<Rational>& x,
                       const std::vector<Rational>& y) {
  std::vector<Rational> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return f.evaluate(s);
}

}  // namespace

TEST_CASE("weighted chromatic polynomial examples") {
  CHECK(w(kEdge) == "q1^2 + q2");
  CHECK(w(Graph::complete(3)) == "q1^3 + 3 q1 q2 + 2 q3");
  CHECK(w(Graph::complete(4)) == "q1^4 + 6 q1^2 q2 + 3 q2^2 + 8 q1 q3 + 6 q4");
  CHECK(w(Graph::path(3)) == "q1^3 + 2 q1 q2 + q3");
  CHECK(w(Graph(0)) == "1");
  CHECK(weighted_chromatic_subset(Graph::complete(4)).coefficient(Monomial::variable(4)) == 6);
  CHECK_THROWS_AS(weighted_chromatic_subset(Graph(5), 4), SizeError);
  CHECK_THROWS_AS(weighted_chromatic_subset(Graph(11), 12), SizeError);
}

TEST_CASE("deletion-contraction examples") {
  CHECK(to_string(weighted_chromatic_dc(WeightedGraph(Graph(1), {3}))) == "q3");
  CHECK(to_string(weighted_chromatic_dc(WeightedGraph(kEdge))) == "q1^2 + q2");
  CHECK(to_string(weighted_chromatic_dc(WeightedGraph(Graph::path(3)))) == "q1^3 + 2 q1 q2 + q3");
  CHECK_THROWS_AS(weighted_chromatic_dc(WeightedGraph(Graph(2), {4, 4}), 7), SizeError);
}

TEST_CASE("deletion-contraction equals the subset expansion") {
  for (const Graph& g : testing::canonical_graphs_between(0, 6)) {
    CHECK(weighted_chromatic_dc(WeightedGraph(g)) == weighted_chromatic_subset(g));
  }
}

TEST_CASE("Abel polynomial examples") {
  CHECK(a(kEdge) == "q1^2 + 2 q2");
  CHECK(a(Graph::complete(3)) == "q1^3 + 6 q1 q2 + 9 q3");
  CHECK(a(Graph::complete(4)) == "q1^4 + 12 q1^2 q2 + 12 q2^2 + 36 q1 q3 + 64 q4");
  CHECK(a(Graph(0)) == "1");
  CHECK(abel(Graph::complete(3)).coefficient(Monomial{{1, 1}, {2, 1}}) == 6);
}

TEST_CASE("Abel top coefficient and one-variable specialisation") {
  for (int n = 1; n <= 7; ++n) {
    const TruncSeries an = abel(Graph::complete(n), n);
    BigInt top = 1;
    for (int i = 0; i < n - 1; ++i) top *= n;
    CHECK(an.coefficient(Monomial::variable(n)) == Rational(top));
    if (n > 6) continue;
    for (int x = 0; x <= n + 1; ++x) {
      const std::vector<Rational> at(static_cast<std::size_t>(n), Rational(x));
      BigInt expected = x;
      for (int i = 0; i < n - 1; ++i) expected *= x + n;
      CHECK(an.evaluate(at) == Rational(expected));
    }
  }
}

TEST_CASE("chromatic oracle examples") {
  CHECK(chromatic_oracle(Graph::complete(3), 3) == 6);
  CHECK(chromatic_oracle(kEdge, 2) == 2);
  CHECK(chromatic_oracle(Graph::path(3), 2) == 2);
  CHECK(chromatic_oracle(Graph(0), 0) == 1);
  CHECK(chromatic_oracle(Graph(2), 0) == 0);
  CHECK_THROWS_AS(chromatic_oracle(Graph(9), 2), SizeError);
}

TEST_CASE("chromatic specialisation of W") {
  for (const Graph& g : testing::canonical_graphs_between(0, 6)) {
    const TruncSeries wg = weighted_chromatic_subset(g);
    const int n = g.vertex_count();
    for (int k = 0; k <= 5; ++k) {
      const std::vector<Rational> at(kMaxVariable, Rational(-k));
      Rational value = wg.evaluate(at);
      if (n % 2 == 1) value = -value;
      CHECK(value == Rational(BigInt(static_cast<unsigned long>(chromatic_oracle(g, k)))));
    }
  }
}

TEST_CASE("binomial property") {
  for (const Graph& g : testing::canonical_graphs_between(0, 5)) {
    const int n = g.vertex_count();
    for (Invariant which : {Invariant::W, Invariant::A}) {
      const TruncSeries f = evaluate_invariant(which, g);
      for (int point = 0; point < 20; ++point) {
        std::vector<Rational> x(static_cast<std::size_t>(std::max(n, 1))),
            y(static_cast<std::size_t>(std::max(n, 1)));
        for (auto& v : x) v = testing::random_rational();
        for (auto& v : y) v = testing::random_rational();
        Rational rhs = 0;
        for (unsigned s = 0; s < (1u << n); ++s) {
          const auto left = static_cast<VertexSet>(s);
          const auto right = static_cast<VertexSet>(g.all_vertices() & ~left);
          rhs += evaluate_invariant(which, g.induced(left)).evaluate(x) *
                 evaluate_invariant(which, g.induced(right)).evaluate(y);
        }
        CHECK(shifted_value(f, x, y) == rhs);
      }
    }
  }
}

TEST_CASE("multiplicativity on disjoint unions") {
  const auto graphs = testing::canonical_graphs_between(0, 5);
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      if (g.vertex_count() + h.vertex_count() > 6) continue;
      const Graph u = disjoint_union(g, h);
      CHECK(weighted_chromatic_subset(u) == weighted_chromatic_subset(g) * weighted_chromatic_subset(h));
      CHECK(abel(u) == abel(g) * abel(h));
    }
  }
}

TEST_CASE("umbral reconstruction examples") {
  UmbralCoefficients b;
  b.set(Graph(1), 1);
  CHECK(to_string(umbral_from_b(Graph(1), b)) == "q1");
  b.set(kEdge, 1);
  CHECK(to_string(umbral_from_b(kEdge, b)) == "q1^2 + q2");
  b.set(kEdge, 2);
  CHECK(to_string(umbral_from_b(kEdge, b)) == "q1^2 + 2 q2");
  CHECK_THROWS_AS(umbral_from_b(Graph::complete(3), b), IncompleteCoefficientsError);
  CHECK_THROWS_AS(b.set(Graph(2), 1), DomainError);
  CHECK(b.get(Graph(3)) == Rational(0));
  CHECK_FALSE(b.get(Graph::complete(3)).has_value());
}

TEST_CASE("extract_b") {
  CHECK(extract_b(Invariant::W, kEdge) == 1);
  CHECK(extract_b(Invariant::A, Graph::complete(3)) == 9);
  CHECK(extract_b(Invariant::A, Graph(1)) == 1);
  CHECK_THROWS_AS(extract_b(Invariant::W, Graph(2)), DomainError);
}

TEST_CASE("umbral reconstruction reproduces W and A") {
  for (const Graph& g : testing::canonical_graphs_between(0, 6)) {
    for (Invariant which : {Invariant::W, Invariant::A}) {
      CHECK(umbral_from_b(g, collect_b(which, g)) == evaluate_invariant(which, g));
    }
  }
}

TEST_CASE("invariants are homogeneous of weight n") {
  for (const Graph& g : testing::canonical_graphs_between(1, 5)) {
    for (Invariant which : {Invariant::W, Invariant::A}) {
      const TruncSeries f = evaluate_invariant(which, g);
      CHECK(f.homogeneous_part(g.vertex_count()) == f);
      CHECK(f.coefficient(Monomial::variable(1, g.vertex_count())) == 1);
    }
  }
}

TEST_CASE("subset expansion is independent of job count") {
  const Graph g = testing::random_graph(9, 0.55);
  if (g.edge_count() <= 26) {
    const TruncSeries one = weighted_chromatic_subset(g, 9, {1, kernels::Isa::scalar});
    CHECK(weighted_chromatic_subset(g, 9, {3, kernels::Isa::scalar}) == one);
    CHECK(weighted_chromatic_subset(g, 9, {2, kernels::Isa::avx2}) == one);
  }
}

TEST_CASE("parse_invariant") {
  CHECK(parse_invariant("W") == Invariant::W);
  CHECK(parse_invariant("A") == Invariant::A);
  CHECK_THROWS_AS(parse_invariant("X"), DomainError);
}
