#include "kpg/census.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "kpg/error.hpp"

namespace kpg {

namespace {

void integer_partitions(int remaining, int max_part, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    integer_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

constexpr std::size_t kBlock = 4096;

}  // namespace

std::uint64_t ComponentCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& row : rows) {
    for (auto c : row.by_edges) t += c;
  }
  return t;
}

ComponentCensus subset_census(const Graph& g, const CensusOptions& options) {
  const kernels::CensusProblem problem(g);
  const int m = static_cast<int>(problem.edges.size());
  const std::size_t width = static_cast<std::size_t>(m) + 1;

  ComponentCensus census;
  census.vertex_count = problem.n;
  census.edge_count = m;
  std::vector<std::vector<int>> shapes;
  std::vector<int> prefix;
  integer_partitions(problem.n, problem.n, prefix, shapes);

  std::vector<std::int32_t> row_of(std::size_t{1} << problem.codec.key_bits(), -1);
  for (std::size_t r = 0; r < shapes.size(); ++r) {
    row_of[problem.codec.encode(shapes[r])] = static_cast<std::int32_t>(r);
  }

  const std::uint64_t total = std::uint64_t{1} << m;
  const int jobs = static_cast<int>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.jobs, 1)), 1,
                                std::max<std::uint64_t>(total / kBlock, 1)));
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(jobs), std::vector<std::uint64_t>(shapes.size() * width, 0));

  auto work = [&](int job) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(job) / jobs;
    const std::uint64_t end = total * static_cast<std::uint64_t>(job + 1) / jobs;
    auto& counts = partial[static_cast<std::size_t>(job)];
    std::vector<std::uint32_t> keys(kBlock);
    for (std::uint64_t start = begin; start < end; start += kBlock) {
      const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - start));
      std::span<std::uint32_t> out(keys.data(), len);
      kernels::classify(options.isa, problem, start, out);
      for (std::size_t i = 0; i < len; ++i) {
        const auto row = static_cast<std::size_t>(row_of[out[i]]);
        counts[row * width + static_cast<std::size_t>(std::popcount(start + i))] += 1;
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
  }

  census.rows.reserve(shapes.size());
  for (std::size_t r = 0; r < shapes.size(); ++r) {
    ComponentCensus::Row row{shapes[r], std::vector<std::uint64_t>(width, 0)};
    for (const auto& counts : partial) {
      for (std::size_t e = 0; e < width; ++e) row.by_edges[e] += counts[r * width + e];
    }
    census.rows.push_back(std::move(row));
  }
  return census;
}

}  // namespace kpg
