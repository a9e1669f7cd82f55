#include <atomic>
#include <cstdlib>
#include <cstring>

#include "sublevel/kernels.hpp"

namespace sublevel::kernels {

namespace {

Isa detect() {
  const char* env = std::getenv("SUBLEVEL_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& current() {
  static std::atomic<int> isa{static_cast<int>(detect())};
  return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(SUBLEVEL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return static_cast<Isa>(current().load(std::memory_order_relaxed)); }

void force_isa(std::optional<Isa> isa) {
  Isa pick = isa.value_or(detect());
  if (pick == Isa::Avx2 && !avx2_supported()) pick = Isa::Scalar;
  current().store(static_cast<int>(pick), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

#if defined(SUBLEVEL_HAVE_AVX2)
#define SUBLEVEL_DISPATCH(fn, ...) \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define SUBLEVEL_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double dot(const double* a, const double* b, std::size_t n) { return SUBLEVEL_DISPATCH(dot, a, b, n); }

void axpy(std::size_t n, double alpha, const double* x, double* y) { SUBLEVEL_DISPATCH(axpy, n, alpha, x, y); }

void rank1_update(std::size_t rows, std::size_t cols, double alpha, const double* x, const double* z,
                  double* G, std::size_t ld) {
  SUBLEVEL_DISPATCH(rank1_update, rows, cols, alpha, x, z, G, ld);
}

}  // namespace sublevel::kernels
