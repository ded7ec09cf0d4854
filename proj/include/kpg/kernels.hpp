#pragma once

// Edge-subset classification kernels.
//
// Given a graph with m edges, subset index s in [0, 2^m) selects edge b when
// bit b of s is set. A kernel writes, for a run of consecutive indices, the
// shape key of the spanning subgraph (V, E_s): an encoding of the multiset of
// its connected-component sizes. The scalar kernel is the reference (one
// union-find per subset); the AVX2 kernel classifies eight subsets per
// register with min-label propagation. Both must produce identical keys.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kpg/graph.hpp"

namespace kpg::kernels {

inline constexpr int kMaxCensusVertices = 10;
inline constexpr int kMaxCensusEdges = 32;

/// Packs a multiset of component sizes (an integer partition of n) into a
/// 32-bit key: size s owns a bit field of width bit_width(n / s) holding the
/// number of components of that size. Adding 1 << offset(s) once per
/// component builds the key incrementally.
class ShapeCodec {
 public:
  explicit ShapeCodec(int n);

  int vertex_count() const noexcept { return n_; }
  int key_bits() const noexcept { return total_bits_; }
  std::uint32_t offset(int size) const { return offsets_.at(static_cast<std::size_t>(size)); }

  std::uint32_t encode(std::span<const int> sizes) const;
  /// Component sizes in nonincreasing order.
  std::vector<int> decode(std::uint32_t key) const;

 private:
  int n_;
  int total_bits_ = 0;
  std::array<std::uint32_t, kMaxCensusVertices + 1> offsets_{};
  std::array<std::uint32_t, kMaxCensusVertices + 1> widths_{};
};

/// Immutable description of one classification problem.
struct CensusProblem {
  int n = 0;
  std::vector<Edge> edges;
  ShapeCodec codec{0};

  explicit CensusProblem(const Graph& g);
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
/// Whether the running CPU (and this build) can execute the variant.
bool isa_available(Isa isa);
/// Widest available variant.
Isa best_isa();
/// Whether the variant handles this problem; AVX2 needs n <= 8 and m <= 31.
bool isa_supports(Isa isa, const CensusProblem& problem);

/// keys[i] = shape key of subset `first + i`, for i < keys.size().
void classify_scalar(const CensusProblem& problem, std::uint64_t first,
                     std::span<std::uint32_t> keys);
void classify_avx2(const CensusProblem& problem, std::uint64_t first,
                   std::span<std::uint32_t> keys);

/// Dispatches to the requested variant, falling back to scalar when the
/// variant is unavailable or does not support the problem.
void classify(Isa isa, const CensusProblem& problem, std::uint64_t first,
              std::span<std::uint32_t> keys);

}  // namespace kpg::kernels
