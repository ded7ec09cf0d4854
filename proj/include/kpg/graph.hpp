#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpg {

inline constexpr int kMaxVertices = 12;

/// Edge bitset over the C(n,2) slots of K_n. n <= 12 needs 66 slots.
__extension__ typedef unsigned __int128 EdgeMask;

/// Vertex subset as a bitmask over {0..11}.
using VertexSet = std::uint16_t;

/// Slot of edge {i,j}, i < j: (0,1),(0,2),(1,2),(0,3),... (colex on the larger
/// endpoint). graph6, canonical forms and subset enumeration all use this order.
constexpr int edge_slot(int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

std::pair<int, int> slot_endpoints(int slot);

inline int popcount(EdgeMask m) noexcept {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}

inline constexpr EdgeMask slot_bit(int slot) noexcept { return EdgeMask{1} << slot; }

using Edge = std::pair<int, int>;

/// Simple labeled graph on vertices {0..n-1}, 0 <= n <= 12. n = 0 is the empty
/// graph (the Hopf unit). Values are immutable; the with_/without_ members
/// return modified copies.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, EdgeMask edges);
  Graph(int n, std::initializer_list<Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Vertex 0 joined to 1..n-1.
  static Graph star(int n);

  int vertex_count() const noexcept { return n_; }
  EdgeMask edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return popcount(edges_); }
  bool has_edge(int i, int j) const;

  Graph with_edge(int i, int j) const;
  Graph without_edge(int i, int j) const;

  /// Neighbourhood of every vertex as a bitmask.
  std::array<VertexSet, kMaxVertices> adjacency() const noexcept;
  int degree(int v) const;
  /// Present edges in slot order.
  std::vector<Edge> edge_list() const;

  /// Induced subgraph on `vertices`, relabelled 0..k-1 in increasing order.
  Graph induced(VertexSet vertices) const;
  /// Relabelling with perm[old] = new.
  Graph relabeled(std::span<const int> perm) const;
  /// Drops every edge joining two different blocks.
  Graph restricted_to_blocks(std::span<const VertexSet> blocks) const;

  VertexSet all_vertices() const noexcept {
    return static_cast<VertexSet>((1u << n_) - 1u);
  }

  friend bool operator==(const Graph&, const Graph&) = default;
  /// Orders by vertex count, then edge bitset.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept;

 private:
  int n_ = 0;
  EdgeMask edges_ = 0;
};

/// Left factor keeps its labels, right factor is shifted by the left vertex count.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Graph with positive vertex weights; the total weight is the grading.
class WeightedGraph {
 public:
  /// All weights 1.
  explicit WeightedGraph(Graph g);
  WeightedGraph(Graph g, std::vector<int> weights);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }
  int total_weight() const noexcept;

  bool operator==(const WeightedGraph&) const = default;

 private:
  Graph graph_;
  std::vector<int> weights_;
};

/// Set partition of {0..n-1}; blocks are disjoint, nonempty and ordered by
/// their minimum element.
struct SetPartition {
  std::vector<VertexSet> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  bool operator==(const SetPartition&) const = default;
};

// ---------------------------------------------------------------------------
// Structure

/// Connected components as vertex sets ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g);
/// Throws DomainError for the empty graph, which is not connected by convention.
bool is_connected(const Graph& g);

/// Merges the endpoints of e into the lower-numbered one; vertices above the
/// higher endpoint shift down by one. Parallel edges collapse and the merged
/// vertex carries the sum of both weights. Throws MissingEdgeError when e is
/// not an edge.
WeightedGraph contract_edge(const WeightedGraph& wg, Edge e);

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

template <class F>
void forests_from(const std::vector<Edge>& edges, std::size_t next,
                  std::array<std::uint8_t, kMaxVertices> label, EdgeMask chosen, F& visit) {
  if (next == edges.size()) {
    visit(chosen);
    return;
  }
  forests_from(edges, next + 1, label, chosen, visit);
  auto [a, b] = edges[next];
  const std::uint8_t la = label[a], lb = label[b];
  if (la == lb) return;
  for (auto& l : label) {
    if (l == lb) l = la;
  }
  forests_from(edges, next + 1, label, chosen | slot_bit(edge_slot(a, b)), visit);
}

template <class F>
void partitions_from(int n, int i, std::array<std::uint8_t, kMaxVertices>& rgs, int blocks,
                     F& visit) {
  if (i == n) {
    SetPartition p;
    p.blocks.assign(static_cast<std::size_t>(blocks), 0);
    for (int v = 0; v < n; ++v) p.blocks[rgs[v]] |= static_cast<VertexSet>(1u << v);
    visit(p);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs[i] = static_cast<std::uint8_t>(b);
    partitions_from(n, i + 1, rgs, b == blocks ? blocks + 1 : blocks, visit);
  }
}

}  // namespace detail

/// Calls visit(EdgeMask) once for every acyclic edge subset of g, the empty
/// forest included. Recursive edge inclusion with cycle rejection.
template <class F>
void for_each_spanning_forest(const Graph& g, F&& visit) {
  std::array<std::uint8_t, kMaxVertices> label{};
  for (int v = 0; v < kMaxVertices; ++v) label[v] = static_cast<std::uint8_t>(v);
  detail::forests_from(g.edge_list(), 0, label, EdgeMask{0}, visit);
}

std::vector<EdgeMask> spanning_forests(const Graph& g);

/// Calls visit(const SetPartition&) for every set partition of {0..n-1}
/// (restricted growth strings), Bell(n) calls in total.
template <class F>
void for_each_set_partition(int n, F&& visit);

std::vector<SetPartition> set_partitions(int n);

void check_partition_size(int n);

template <class F>
void for_each_set_partition(int n, F&& visit) {
  check_partition_size(n);
  std::array<std::uint8_t, kMaxVertices> rgs{};
  detail::partitions_from(n, 0, rgs, 0, visit);
}

// ---------------------------------------------------------------------------
// Symmetry

/// |Aut(g)| by exhaustive backtracking over degree-preserving maps. n <= 10.
std::uint64_t aut_order(const Graph& g);

/// Isomorphism-invariant representative: the smallest edge bitset among the
/// relabellings that list vertices by nondecreasing degree. n <= 8.
Graph canonical_form(const Graph& g);

/// Canonical representatives of every graph on n vertices, sorted. n <= 7.
std::vector<Graph> canonical_graphs(int n);

// ---------------------------------------------------------------------------
// graph6

/// Throws ParseError on malformed input and SizeError for more than 12 vertices.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Graph6 corpus: one graph per line; blank lines and lines starting with '#'
/// are skipped. Parse errors report the offset within the whole text.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace kpg
