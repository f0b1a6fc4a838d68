#include "tetra/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tetra/errors.hpp"

namespace tetra {

namespace {

bool finite(cplx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool Coefficients::finite() const noexcept { return tetra::finite(zeta) && tetra::finite(eta); }

cplx InitialValues::at(int i) const {
    if (i < -2 || i > 1) throw IndexRangeError("initial value index must lie in [-2, 1], got " + std::to_string(i));
    return g[static_cast<std::size_t>(i + 2)];
}

InitialValues InitialValues::unit(int i) {
    if (i < -2 || i > 1) throw IndexRangeError("basic polynomial index must lie in [-2, 1], got " + std::to_string(i));
    InitialValues v;
    v.g[static_cast<std::size_t>(i + 2)] = 1.0;
    return v;
}

bool InitialValues::finite() const noexcept {
    return std::all_of(g.begin(), g.end(), [](cplx z) { return tetra::finite(z); });
}

cplx SequenceWindow::at(long j) const {
    if (!contains(j)) throw IndexRangeError("index " + std::to_string(j) + " outside window");
    return values[static_cast<std::size_t>(j - lo)];
}

double SequenceWindow::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

cplx step_forward(std::span<const cplx, 4> tail, const Coefficients& c) noexcept {
    return c.zeta * tail[2] - tail[0] + c.eta * (tail[3] + tail[1]);
}

cplx step_backward(std::span<const cplx, 4> head, const Coefficients& c) noexcept {
    return c.zeta * head[1] - head[3] + c.eta * (head[2] + head[0]);
}

SequenceWindow eval_range(const InitialValues& g, const Coefficients& c, long lo, long hi) {
    if (lo > hi) throw IndexRangeError("eval_range: lo (" + std::to_string(lo) + ") > hi (" + std::to_string(hi) + ")");

    // Work on [min(lo,-2), max(hi,1)] so the initial window is always materialised.
    const long wlo = std::min(lo, -2L);
    const long whi = std::max(hi, 1L);
    std::vector<cplx> buf(static_cast<std::size_t>(whi - wlo + 1));
    const auto idx = [wlo](long j) { return static_cast<std::size_t>(j - wlo); };

    for (int i = -2; i <= 1; ++i) buf[idx(i)] = g.at(i);
    for (long j = 2; j <= whi; ++j) {
        buf[idx(j)] = step_forward(std::span<const cplx, 4>(&buf[idx(j - 4)], 4), c);
    }
    for (long j = -3; j >= wlo; --j) {
        buf[idx(j)] = step_backward(std::span<const cplx, 4>(&buf[idx(j + 1)], 4), c);
    }

    SequenceWindow w;
    w.lo = lo;
    w.values.assign(buf.begin() + static_cast<std::ptrdiff_t>(idx(lo)), buf.begin() + static_cast<std::ptrdiff_t>(idx(hi)) + 1);
    return w;
}

std::vector<cplx> generating_series(const InitialValues& g, const Coefficients& c, std::size_t n) {
    if (n == 0) throw IndexRangeError("generating_series: n must be >= 1");
    const cplx gm2 = g.at(-2), gm1 = g.at(-1), g0 = g.at(0), g1 = g.at(1);
    // numerator  g0 + (g1 - eta g0) t + (eta g-1 - g-2) t^2 - g-1 t^3
    // denominator 1 - eta t - zeta t^2 - eta t^3 + t^4
    const std::array<cplx, 4> num{g0, g1 - c.eta * g0, c.eta * gm1 - gm2, -gm1};

    std::vector<cplx> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx v = k < num.size() ? num[k] : cplx{};
        if (k >= 1) v += c.eta * a[k - 1];
        if (k >= 2) v += c.zeta * a[k - 2];
        if (k >= 3) v += c.eta * a[k - 3];
        if (k >= 4) v -= a[k - 4];
        a[k] = v;
    }
    return a;
}

cplx basic_tetranacci_ref(int i, long j, const Coefficients& c) {
    return eval_range(InitialValues::unit(i), c, j, j).values.front();
}

double max_recursion_residual(const SequenceWindow& w, const Coefficients& c) noexcept {
    double worst = 0.0;
    const auto& v = w.values;
    for (std::size_t k = 4; k < v.size(); ++k) {
        const cplx predicted = c.zeta * v[k - 2] - v[k - 4] + c.eta * (v[k - 1] + v[k - 3]);
        worst = std::max(worst, std::abs(v[k] - predicted));
    }
    return worst;
}

}  // namespace tetra
