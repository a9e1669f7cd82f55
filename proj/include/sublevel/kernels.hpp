#pragma once

#include <cstddef>
#include <optional>

namespace sublevel::kernels {

enum class Isa { Scalar, Avx2 };

bool avx2_supported();
// Selected once from CPU features; SUBLEVEL_ISA=scalar in the environment pins the scalar path.
Isa active_isa();
void force_isa(std::optional<Isa> isa);
const char* isa_name(Isa isa);

double dot(const double* a, const double* b, std::size_t n);
void axpy(std::size_t n, double alpha, const double* x, double* y);
// G[:, q] += alpha * z[q] * x for q < cols; G column-major with leading dimension ld.
void rank1_update(std::size_t rows, std::size_t cols, double alpha, const double* x, const double* z,
                  double* G, std::size_t ld);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(std::size_t n, double alpha, const double* x, double* y);
void rank1_update(std::size_t rows, std::size_t cols, double alpha, const double* x, const double* z,
                  double* G, std::size_t ld);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(std::size_t n, double alpha, const double* x, double* y);
void rank1_update(std::size_t rows, std::size_t cols, double alpha, const double* x, const double* z,
                  double* G, std::size_t ld);
}  // namespace avx2

}  // namespace sublevel::kernels
