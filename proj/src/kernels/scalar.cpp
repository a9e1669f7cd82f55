#include "sublevel/kernels.hpp"

namespace sublevel::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rank1_update(std::size_t rows, std::size_t cols, double alpha, const double* x, const double* z,
                  double* G, std::size_t ld) {
  for (std::size_t q = 0; q < cols; ++q) {
    double s = alpha * z[q];
    if (s == 0.0) continue;
    axpy(rows, s, x, G + q * ld);
  }
}

}  // namespace sublevel::kernels::scalar
