#include "kpg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kpg/error.hpp"

namespace kpg {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("vertex count " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

EdgeMask slots_mask(int n) {
  const int slots = n * (n - 1) / 2;
  return slots == 0 ? EdgeMask{0} : (~EdgeMask{0}) >> (128 - slots);
}

}  // namespace

std::pair<int, int> slot_endpoints(int slot) {
  int j = 1;
  while ((j + 1) * j / 2 <= slot) ++j;
  return {slot - j * (j - 1) / 2, j};
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) { check_vertex_count(n); }

Graph::Graph(int n, EdgeMask edges) : n_(n), edges_(edges) {
  check_vertex_count(n);
  if ((edges & ~slots_mask(n)) != 0) throw DomainError("edge slot beyond K_n");
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
  for (auto [i, j] : edges) *this = with_edge(i, j);
}

Graph Graph::complete(int n) { return Graph(n, slots_mask(n)); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g = g.with_edge(0, n - 1);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g = g.with_edge(0, v);
  return g;
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) return false;
  return (edges_ & slot_bit(edge_slot(i, j))) != 0;
}

Graph Graph::with_edge(int i, int j) const {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) throw DomainError("loops are not allowed");
  Graph g = *this;
  g.edges_ |= slot_bit(edge_slot(i, j));
  return g;
}

Graph Graph::without_edge(int i, int j) const {
  check_vertex(n_, i);
  check_vertex(n_, j);
  Graph g = *this;
  if (i != j) g.edges_ &= ~slot_bit(edge_slot(i, j));
  return g;
}

std::array<VertexSet, kMaxVertices> Graph::adjacency() const noexcept {
  std::array<VertexSet, kMaxVertices> adj{};
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((edges_ & slot_bit(edge_slot(i, j))) != 0) {
        adj[i] |= static_cast<VertexSet>(1u << j);
        adj[j] |= static_cast<VertexSet>(1u << i);
      }
    }
  }
  return adj;
}

int Graph::degree(int v) const {
  check_vertex(n_, v);
  return std::popcount(static_cast<unsigned>(adjacency()[v]));
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((edges_ & slot_bit(edge_slot(i, j))) != 0) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph Graph::induced(VertexSet vertices) const {
  std::array<int, kMaxVertices> label{};
  int k = 0;
  for (int v = 0; v < n_; ++v) {
    label[v] = (vertices >> v) & 1u ? k++ : -1;
  }
  Graph g(k);
  for (auto [i, j] : edge_list()) {
    if (label[i] >= 0 && label[j] >= 0) g.edges_ |= slot_bit(edge_slot(label[i], label[j]));
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw DomainError("permutation size mismatch");
  Graph g(n_);
  for (auto [i, j] : edge_list()) g.edges_ |= slot_bit(edge_slot(perm[i], perm[j]));
  return g;
}

Graph Graph::restricted_to_blocks(std::span<const VertexSet> blocks) const {
  std::array<int, kMaxVertices> block_of{};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v = 0; v < n_; ++v) {
      if ((blocks[b] >> v) & 1u) block_of[v] = static_cast<int>(b);
    }
  }
  Graph g(n_);
  for (auto [i, j] : edge_list()) {
    if (block_of[i] == block_of[j]) g.edges_ |= slot_bit(edge_slot(i, j));
  }
  return g;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.edges_ <=> b.edges_;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [i, j] : a.edge_list()) g = g.with_edge(i, j);
  for (auto [i, j] : b.edge_list()) g = g.with_edge(i + na, j + na);
  return g;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(Graph g)
    : graph_(g), weights_(static_cast<std::size_t>(g.vertex_count()), 1) {}

WeightedGraph::WeightedGraph(Graph g, std::vector<int> weights)
    : graph_(g), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DomainError("one weight per vertex required");
  }
  for (int w : weights_) {
    if (w < 1) throw DomainError("vertex weights must be positive");
  }
}

int WeightedGraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0);
}

// ---------------------------------------------------------------------------
// Structure

std::vector<VertexSet> components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((seen >> v) & 1u) continue;
    VertexSet comp = static_cast<VertexSet>(1u << v);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("the empty graph is not classified as connected");
  return components(g).size() == 1;
}

WeightedGraph contract_edge(const WeightedGraph& wg, Edge e) {
  const Graph& g = wg.graph();
  auto [u, v] = e;
  if (u > v) std::swap(u, v);
  if (u == v || u < 0 || v >= g.vertex_count() || !g.has_edge(u, v)) {
    throw MissingEdgeError("edge {" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + "} is not present");
  }
  const int n = g.vertex_count();
  auto image = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
  Graph out(n - 1);
  for (auto [i, j] : g.edge_list()) {
    const int a = image(i), b = image(j);
    if (a != b) out = out.with_edge(a, b);
  }
  std::vector<int> weights;
  for (int x = 0; x < n; ++x) {
    if (x == v) continue;
    weights.push_back(x == u ? wg.weight(u) + wg.weight(v) : wg.weight(x));
  }
  return WeightedGraph(out, std::move(weights));
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<EdgeMask> spanning_forests(const Graph& g) {
  std::vector<EdgeMask> out;
  for_each_spanning_forest(g, [&](EdgeMask f) { out.push_back(f); });
  return out;
}

void check_partition_size(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("set partitions need 0 <= n <= " + std::to_string(kMaxVertices));
  }
}

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry

namespace {

struct AutSearch {
  int n;
  std::array<VertexSet, kMaxVertices> adj;
  std::array<int, kMaxVertices> deg;
  std::array<int, kMaxVertices> image{};
  VertexSet used = 0;
  std::uint64_t count = 0;

  void extend(int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (((used >> w) & 1u) || deg[w] != deg[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const bool e1 = (adj[u] >> v) & 1u;
        const bool e2 = (adj[image[u]] >> w) & 1u;
        ok = e1 == e2;
      }
      if (!ok) continue;
      image[v] = w;
      used |= static_cast<VertexSet>(1u << w);
      extend(v + 1);
      used &= static_cast<VertexSet>(~(1u << w));
    }
  }
};

}  // namespace

std::uint64_t aut_order(const Graph& g) {
  if (g.vertex_count() > 10) throw SizeError("aut_order supports at most 10 vertices");
  AutSearch s{g.vertex_count(), g.adjacency(), {}};
  for (int v = 0; v < s.n; ++v) s.deg[v] = std::popcount(static_cast<unsigned>(s.adj[v]));
  s.extend(0);
  return s.count;
}

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw SizeError("canonical_form supports at most 8 vertices");
  if (n <= 1) return g;
  const auto adj = g.adjacency();
  // order[new] = old; vertices sorted by degree, permuted only within a degree class.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return std::popcount(static_cast<unsigned>(adj[v])); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto evaluate = [&] {
    std::uint64_t mask = 0;
    for (int j = n - 1; j >= 1; --j) {
      const VertexSet row = adj[order[j]];
      for (int i = j - 1; i >= 0; --i) {
        if ((row >> order[i]) & 1u) mask |= std::uint64_t{1} << edge_slot(i, j);
      }
    }
    best = std::min(best, mask);
  };
  // Odometer over the product of per-class permutations.
  for (auto [b, e] : classes) std::sort(order.begin() + b, order.begin() + e);
  while (true) {
    evaluate();
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  return Graph(n, EdgeMask{best});
}

std::vector<Graph> canonical_graphs(int n) {
  if (n < 0 || n > 7) throw SizeError("canonical_graphs supports 0 <= n <= 7");
  std::set<Graph> seen;
  const int slots = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots); ++m) {
    seen.insert(canonical_form(Graph(n, EdgeMask{m})));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace kpg
