#include "kpg/kernels.hpp"

namespace kpg::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(KPG_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

bool isa_supports(Isa isa, const CensusProblem& problem) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return problem.n <= 8 && problem.edges.size() <= 31;
  }
  return false;
}

void classify(Isa isa, const CensusProblem& problem, std::uint64_t first,
              std::span<std::uint32_t> keys) {
#if defined(KPG_HAVE_AVX2_KERNEL)
  if (isa == Isa::avx2 && isa_available(isa) && isa_supports(isa, problem)) {
    classify_avx2(problem, first, keys);
    return;
  }
#endif
  classify_scalar(problem, first, keys);
}

}  // namespace kpg::kernels
