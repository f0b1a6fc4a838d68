#pragma once
// Data-parallel double-precision kernels used by the dense oracle.
// A scalar reference set is always available; an AVX2/FMA set is compiled
// when TETRA_HAVE_AVX2 is defined and picked at runtime if the CPU has it.

#include <cstddef>

namespace tetra::kernels {

enum class Isa { Scalar, Avx2 };

[[nodiscard]] const char* to_string(Isa isa) noexcept;

/// Whether the running CPU (and this build) can execute the AVX2 set.
[[nodiscard]] bool avx2_available() noexcept;

/// ISA whose kernels the dispatching entry points currently call.
[[nodiscard]] Isa active_isa() noexcept;

/// Forces the dispatch target. Returns false (and leaves dispatch unchanged)
/// if the requested set is unavailable.
bool force_isa(Isa isa) noexcept;

// Plane rotation of two rows: x <- c x - s y, y <- s x + c y.
void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept;
// sum_i x[i] y[i]
[[nodiscard]] double dot(const double* x, const double* y, std::size_t n) noexcept;
// y <- y + a x
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;

namespace scalar {
void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept;
[[nodiscard]] double dot(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;
}  // namespace scalar

#ifdef TETRA_HAVE_AVX2
namespace avx2 {
void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept;
[[nodiscard]] double dot(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;
}  // namespace avx2
#endif

}  // namespace tetra::kernels
