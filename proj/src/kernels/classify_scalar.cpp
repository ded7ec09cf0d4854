#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "kpg/error.hpp"
#include "kpg/kernels.hpp"

namespace kpg::kernels {

ShapeCodec::ShapeCodec(int n) : n_(n) {
  if (n < 0 || n > kMaxCensusVertices) {
    throw SizeError("subset census supports at most " + std::to_string(kMaxCensusVertices) +
                    " vertices");
  }
  std::uint32_t offset = 0;
  for (int s = 1; s <= n; ++s) {
    offsets_[s] = offset;
    widths_[s] = static_cast<std::uint32_t>(std::bit_width(static_cast<unsigned>(n / s)));
    offset += widths_[s];
  }
  total_bits_ = static_cast<int>(offset);
}

std::uint32_t ShapeCodec::encode(std::span<const int> sizes) const {
  std::uint32_t key = 0;
  for (int s : sizes) {
    if (s < 1 || s > n_) throw DomainError("component size out of range");
    key += std::uint32_t{1} << offsets_[s];
  }
  return key;
}

std::vector<int> ShapeCodec::decode(std::uint32_t key) const {
  std::vector<int> sizes;
  for (int s = n_; s >= 1; --s) {
    const std::uint32_t count = (key >> offsets_[s]) & ((std::uint32_t{1} << widths_[s]) - 1);
    sizes.insert(sizes.end(), count, s);
  }
  return sizes;
}

CensusProblem::CensusProblem(const Graph& g)
    : n(g.vertex_count()), edges(g.edge_list()), codec(g.vertex_count()) {
  if (edges.size() > static_cast<std::size_t>(kMaxCensusEdges)) {
    throw SizeError("subset census supports at most " + std::to_string(kMaxCensusEdges) +
                    " edges");
  }
}

void classify_scalar(const CensusProblem& problem, std::uint64_t first,
                     std::span<std::uint32_t> keys) {
  const int n = problem.n;
  std::array<int, kMaxCensusVertices> parent{};
  std::array<int, kMaxCensusVertices> size{};
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::uint64_t subset = first + i;
    std::iota(parent.begin(), parent.begin() + n, 0);
    std::fill(size.begin(), size.begin() + n, 1);
    for (std::uint64_t bits = subset; bits != 0; bits &= bits - 1) {
      const auto [a, b] = problem.edges[static_cast<std::size_t>(std::countr_zero(bits))];
      int ra = find(a), rb = find(b);
      if (ra == rb) continue;
      if (size[ra] < size[rb]) std::swap(ra, rb);
      parent[rb] = ra;
      size[ra] += size[rb];
    }
    std::uint32_t key = 0;
    for (int v = 0; v < n; ++v) {
      if (parent[v] == v) key += std::uint32_t{1} << problem.codec.offset(size[v]);
    }
    keys[i] = key;
  }
}

}  // namespace kpg::kernels
