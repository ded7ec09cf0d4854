#pragma once

#include <cstdint>
#include <vector>

#include "kpg/graph.hpp"
#include "kpg/kernels.hpp"

namespace kpg {

struct CensusOptions {
  /// Worker threads for the range-split reduction; results do not depend on it.
  int jobs = 1;
  kernels::Isa isa = kernels::best_isa();
};

/// Histogram of all 2^|E| spanning subgraphs of a graph, keyed by the
/// multiset of component sizes and the number of edges.
struct ComponentCensus {
  struct Row {
    /// Component sizes, nonincreasing.
    std::vector<int> sizes;
    /// by_edges[e] = number of subsets with e edges and this shape.
    std::vector<std::uint64_t> by_edges;

    bool operator==(const Row&) const = default;
  };

  int vertex_count = 0;
  int edge_count = 0;
  /// One row per integer partition of vertex_count, in decode order.
  std::vector<Row> rows;

  std::uint64_t total() const;
  bool operator==(const ComponentCensus&) const = default;
};

/// Classifies every edge subset of g. n <= 10 and at most 32 edges.
ComponentCensus subset_census(const Graph& g, const CensusOptions& options = {});

}  // namespace kpg
