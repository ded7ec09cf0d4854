// Compiled with -mavx2; only reached after a runtime CPU check.

#include "kpg/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace kpg::kernels {

void classify_avx2(const CensusProblem& problem, std::uint64_t first,
                   std::span<std::uint32_t> keys) {
  const int n = problem.n;
  const int m = static_cast<int>(problem.edges.size());
  const std::size_t count = keys.size();

  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i one = _mm256_set1_epi32(1);
  alignas(32) std::int32_t offset_table[8] = {};
  for (int s = 1; s <= n; ++s) {
    offset_table[s - 1] = static_cast<std::int32_t>(problem.codec.offset(s));
  }
  const __m256i offsets = _mm256_load_si256(reinterpret_cast<const __m256i*>(offset_table));

  __m256i present[31];
  __m256i label[8];
  __m256i vertex_id[8];
  for (int v = 0; v < 8; ++v) vertex_id[v] = _mm256_set1_epi32(v);

  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i idx =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<std::int32_t>(first + i)), lane);
    for (int b = 0; b < m; ++b) {
      const __m256i bit = _mm256_and_si256(_mm256_srl_epi32(idx, _mm_cvtsi32_si128(b)), one);
      present[b] = _mm256_cmpeq_epi32(bit, one);
    }
    for (int v = 0; v < n; ++v) label[v] = vertex_id[v];

    // Min-label propagation; converges to the smallest vertex of each component.
    while (true) {
      __m256i changed = _mm256_setzero_si256();
      for (int b = 0; b < m; ++b) {
        const int u = problem.edges[b].first;
        const int w = problem.edges[b].second;
        const __m256i lo = _mm256_min_epi32(label[u], label[w]);
        const __m256i nu = _mm256_blendv_epi8(label[u], lo, present[b]);
        const __m256i nw = _mm256_blendv_epi8(label[w], lo, present[b]);
        changed = _mm256_or_si256(changed, _mm256_xor_si256(nu, label[u]));
        changed = _mm256_or_si256(changed, _mm256_xor_si256(nw, label[w]));
        label[u] = nu;
        label[w] = nw;
      }
      if (_mm256_testz_si256(changed, changed)) break;
    }

    __m256i key = _mm256_setzero_si256();
    for (int v = 0; v < n; ++v) {
      __m256i size = _mm256_setzero_si256();
      for (int u = 0; u < n; ++u) {
        size = _mm256_sub_epi32(size, _mm256_cmpeq_epi32(label[u], vertex_id[v]));
      }
      const __m256i root = _mm256_cmpeq_epi32(label[v], vertex_id[v]);
      const __m256i shift = _mm256_permutevar8x32_epi32(offsets, _mm256_sub_epi32(size, one));
      key = _mm256_add_epi32(key, _mm256_and_si256(root, _mm256_sllv_epi32(one, shift)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(keys.data() + i), key);
  }
  if (i < count) classify_scalar(problem, first + i, keys.subspan(i));
}

}  // namespace kpg::kernels

#else

#include "kpg/error.hpp"

namespace kpg::kernels {

void classify_avx2(const CensusProblem&, std::uint64_t, std::span<std::uint32_t>) {
  throw Error("AVX2 kernel not compiled into this build");
}

}  // namespace kpg::kernels

#endif
