#pragma once
// Symmetric four-term (Tetranacci) recursion
//
//   xi[j+2] = zeta * xi[j] - xi[j-2] + eta * (xi[j+1] + xi[j-1])
//
// evaluated by plain replay. Everything else in the library is checked
// against the values produced here.

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace tetra {

using cplx = std::complex<double>;

/// Recursion coefficients (zeta, eta).
struct Coefficients {
    cplx zeta{};
    cplx eta{};

    [[nodiscard]] bool finite() const noexcept;
};

/// Initial values g_{-2}, g_{-1}, g_0, g_1.
struct InitialValues {
    std::array<cplx, 4> g{};

    /// Value at sequence index i in [-2, 1].
    [[nodiscard]] cplx at(int i) const;
    /// Kronecker-delta initial data selecting index i.
    [[nodiscard]] static InitialValues unit(int i);

    [[nodiscard]] bool finite() const noexcept;
};

/// Contiguous slice xi[lo], ..., xi[hi] of a sequence.
struct SequenceWindow {
    long lo = 0;
    std::vector<cplx> values;

    [[nodiscard]] long hi() const noexcept { return lo + static_cast<long>(values.size()) - 1; }
    [[nodiscard]] bool contains(long j) const noexcept { return j >= lo && j <= hi(); }
    [[nodiscard]] cplx at(long j) const;
    [[nodiscard]] double max_abs() const noexcept;
};

/// xi[j+2] from tail = (xi[j-2], xi[j-1], xi[j], xi[j+1]).
[[nodiscard]] cplx step_forward(std::span<const cplx, 4> tail, const Coefficients& c) noexcept;

/// xi[j-2] from head = (xi[j-1], xi[j], xi[j+1], xi[j+2]).
[[nodiscard]] cplx step_backward(std::span<const cplx, 4> head, const Coefficients& c) noexcept;

/// Replays the recursion outward from the initial window. Throws IndexRangeError if lo > hi.
[[nodiscard]] SequenceWindow eval_range(const InitialValues& g, const Coefficients& c, long lo, long hi);

/// First n Taylor coefficients of the generating function sum_k xi[k] t^k, by long division.
[[nodiscard]] std::vector<cplx> generating_series(const InitialValues& g, const Coefficients& c, std::size_t n);

/// Basic polynomial T_i(j) by replay (i in -2..1).
[[nodiscard]] cplx basic_tetranacci_ref(int i, long j, const Coefficients& c);

/// |xi[j+2] - zeta xi[j] + xi[j-2] - eta (xi[j+1] + xi[j-1])| maximised over the window interior.
[[nodiscard]] double max_recursion_residual(const SequenceWindow& w, const Coefficients& c) noexcept;

}  // namespace tetra
