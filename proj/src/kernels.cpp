#include "tetra/kernels.hpp"

#include <atomic>

namespace tetra::kernels {

namespace scalar {

void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace scalar

namespace {

std::atomic<Isa> g_isa{avx2_available() ? Isa::Avx2 : Isa::Scalar};

}  // namespace

const char* to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

bool avx2_available() noexcept {
#if defined(TETRA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() noexcept { return g_isa.load(std::memory_order_relaxed); }

bool force_isa(Isa isa) noexcept {
    if (isa == Isa::Avx2 && !avx2_available()) return false;
    g_isa.store(isa, std::memory_order_relaxed);
    return true;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) noexcept {
#ifdef TETRA_HAVE_AVX2
    if (active_isa() == Isa::Avx2) return avx2::rotate(x, y, n, c, s);
#endif
    scalar::rotate(x, y, n, c, s);
}

double dot(const double* x, const double* y, std::size_t n) noexcept {
#ifdef TETRA_HAVE_AVX2
    if (active_isa() == Isa::Avx2) return avx2::dot(x, y, n);
#endif
    return scalar::dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) noexcept {
#ifdef TETRA_HAVE_AVX2
    if (active_isa() == Isa::Avx2) return avx2::axpy(a, x, y, n);
#endif
    scalar::axpy(a, x, y, n);
}

}  // namespace tetra::kernels
