#include "tetra/chain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tetra/dense.hpp"
#include "tetra/errors.hpp"
#include "tetra/kernels.hpp"

namespace tetra {

namespace {

constexpr double kPi = std::numbers::pi;

// Keeps Re in [0, pi] for real cosines; otherwise picks Im >= 0.
cplx fold_angle(cplx th, bool real_cosine) {
    if (th.imag() < 0.0) th = real_cosine ? std::conj(th) : -th;
    return th;
}

cplx safe_quantization_f(cplx x, int n) {
    const double m = n + 2.0;
    const cplx sx = std::sin(x);
    if (std::abs(sx) < 1e-12) return m * std::cos(m * x) / std::cos(x);
    return std::sin(m * x) / sx;
}

QuantizationResult pick_branch(cplx fp, cplx fm) {
    const double scale = std::max({std::abs(fp), std::abs(fm), 1.0});
    const double r_plus = std::abs(fp - fm) / scale;
    const double r_minus = std::abs(fp + fm) / scale;
    return r_plus <= r_minus ? QuantizationResult{r_plus, 1} : QuantizationResult{r_minus, -1};
}

void fix_sign(std::vector<double>& v) {
    if (v.empty()) return;
    const double big = std::abs(*std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
    for (double x : v) {
        if (std::abs(x) > 1e-8 * big) {
            if (x < 0) for (auto& y : v) y = -y;
            return;
        }
    }
}

double reflect_overlap(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[n - 1 - i];
    return s;
}

}  // namespace

const char* to_string(Arrow a) noexcept {
    switch (a) {
        case Arrow::Inside: return "Inside";
        case Arrow::Outside: return "Outside";
        case Arrow::Boundary: return "Boundary";
    }
    return "?";
}

cplx dispersion(cplx k, const ChainParams& p) noexcept {
    return -p.mu - 2.0 * p.t1 * std::cos(k * p.d) - 2.0 * p.t2 * std::cos(2.0 * k * p.d);
}

Coefficients coeffs_from_energy(double e, const ChainParams& p) {
    if (p.t2 == 0.0) throw ZeroT2Error("coeffs_from_energy: t2 = 0 has no four-term recursion");
    return {cplx(-(e + p.mu) / p.t2), cplx(-p.t1 / p.t2)};
}

std::pair<cplx, cplx> wavevectors_from_energy(double e, const ChainParams& p) {
    const auto cd = characterize(coeffs_from_energy(e, p));
    const auto k_of = [&](cplx s) {
        const bool real_cos = std::abs(s.imag()) <= 1e-14 * std::max(1.0, std::abs(s));
        cplx arg = s / 2.0;
        if (real_cos) arg = arg.real();
        return fold_angle(std::acos(arg), real_cos) / p.d;
    };
    return {k_of(cd.s1), k_of(cd.s2)};
}

cplx quantization_f(cplx x, int n) { return std::sin((n + 2.0) * x) / std::sin(x); }

QuantizationResult quantization_residual(cplx k1, cplx k2, int n, double d) {
    const cplx xp = (k1 + k2) * d / 2.0;
    const cplx xm = (k1 - k2) * d / 2.0;
    if (std::abs(std::sin(xp)) < 1e-12 || std::abs(std::sin(xm)) < 1e-12) {
        throw RemovableSingularityError("quantization_residual: sin(k+- d) vanishes; use the crossing enumeration");
    }
    return pick_branch(quantization_f(xp, n), quantization_f(xm, n));
}

std::vector<EigenMode> spectrum(const ChainParams& p) {
    if (p.n < 1) throw PreconditionError("spectrum: n must be >= 1");
    const auto h = build_chain_matrix(p);
    const auto eig = sym_eigen(h);
    const std::size_t n = static_cast<std::size_t>(p.n);
    const double hnorm = std::max(norm_inf(h), 1e-300);

    std::vector<EigenMode> modes(n);
    for (std::size_t k = 0; k < n; ++k) {
        modes[k].e = eig.values[k];
        modes[k].vector = eig.vector(k);
    }

    // parity, with clusters rotated onto reflection eigenvectors
    std::size_t start = 0;
    while (start < n) {
        std::size_t stop = start + 1;
        while (stop < n && eig.values[stop] - eig.values[stop - 1] < 1e-8 * hnorm) ++stop;
        const std::size_t m = stop - start;
        if (m == 1) {
            modes[start].lambda_i = reflect_overlap(modes[start].vector, modes[start].vector) >= 0.0 ? 1 : -1;
        } else {
            RealMatrix pr(m, m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) pr(a, b) = reflect_overlap(modes[start + a].vector, modes[start + b].vector);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) pr(a, b) = pr(b, a) = 0.5 * (pr(a, b) + pr(b, a));
            const auto w = sym_eigen(pr);
            std::vector<std::vector<double>> rotated(m, std::vector<double>(n, 0.0));
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t a = 0; a < m; ++a)
                    kernels::axpy(w.vectors(a, c), modes[start + a].vector.data(), rotated[c].data(), n);
            for (std::size_t c = 0; c < m; ++c) {
                modes[start + c].vector = std::move(rotated[c]);
                modes[start + c].lambda_i = w.values[c] >= 0.0 ? 1 : -1;
                modes[start + c].degenerate = true;
            }
        }
        start = stop;
    }

    for (auto& mode : modes) {
        fix_sign(mode.vector);
        if (p.t2 != 0.0) {
            const auto [k1, k2] = wavevectors_from_energy(mode.e, p);
            mode.k1 = k1;
            mode.k2 = k2;
            mode.k_plus = (k1 + k2) / 2.0;
            mode.k_minus = (k1 - k2) / 2.0;
            const auto q = pick_branch(safe_quantization_f(mode.k_plus * p.d, p.n), safe_quantization_f(mode.k_minus * p.d, p.n));
            mode.quant_residual = q.residual;
            mode.s_q = q.s_q;
        } else {
            // tridiagonal chain: E = -mu - 2 t1 cos(k d), quantised by sin(k d (N+1)) = 0
            cplx k = 0.0;
            if (p.t1 != 0.0) {
                const double c = -(mode.e + p.mu) / (2.0 * p.t1);
                k = fold_angle(std::acos(cplx(c)), true) / p.d;
            }
            mode.k1 = mode.k2 = k;
            mode.k_plus = k;
            mode.k_minus = 0.0;
            mode.s_q = 0;
            mode.quant_residual = p.t1 != 0.0 ? std::abs(std::sin(k * p.d * (p.n + 1.0))) : 0.0;
        }
        const double tol = 1e-7 / p.d;
        mode.arrow = (std::abs(mode.k1.imag()) < tol && std::abs(mode.k2.imag()) < tol) ? Arrow::Inside : Arrow::Outside;
    }
    return modes;
}

std::vector<double> t1_zero_spectrum(const ChainParams& p) {
    if (p.t1 != 0.0) throw PreconditionError("t1_zero_spectrum: requires t1 = 0");
    if (p.n < 1) throw PreconditionError("t1_zero_spectrum: n must be >= 1");
    const int n = p.n;
    const auto level = [&](int k, int denom) { return -p.mu - 2.0 * p.t2 * std::cos(2.0 * k * kPi / denom); };
    std::vector<double> out;
    if (n % 2 == 0) {
        for (int k = 1; k <= n / 2; ++k) {
            out.push_back(level(k, n + 2));
            out.push_back(level(k, n + 2));
        }
    } else {
        for (int k = 1; k <= (n + 1) / 2; ++k) out.push_back(level(k, n + 3));
        for (int k = 1; k <= (n - 1) / 2; ++k) out.push_back(level(k, n + 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CrossingRecord> crossings(int n, double d) {
    if (n < 2) throw PreconditionError("crossings: n must be >= 2");
    const int n_max = (n % 2 == 0) ? (n + 2) / 2 : (n + 1) / 2;
    const double unit = kPi / (n + 2);

    const auto make = [&](int ni, int li, double kp) {
        const double km = li * unit;
        const double k1 = kp + km;
        const double k2 = kp - km;
        CrossingRecord r;
        r.n_idx = ni;
        r.l_idx = li;
        r.k_plus = kp / d;
        r.k_minus = km / d;
        r.eta = 2.0 * (std::cos(k1) + std::cos(k2));
        const double s1 = 2.0 * std::cos(k1);
        r.zeta = s1 * s1 - r.eta * s1 - 2.0;
        r.t1_over_t2 = -r.eta;
        r.e = -r.zeta;
        return r;
    };

    std::vector<CrossingRecord> out;
    for (int ni = 2; ni <= n_max; ++ni)
        for (int li = 1; li < ni; ++li) out.push_back(make(ni, li, ni * unit));
    // mirrored family with eta -> -eta; k+ d = pi/2 lies on eta = 0 and is already listed
    for (int ni = 2; ni <= n_max; ++ni) {
        if (2 * ni == n + 2) continue;
        for (int li = 1; li < ni; ++li) out.push_back(make(ni, li, kPi - ni * unit));
    }
    return out;
}

namespace {

struct TValues {
    CharacteristicData cd;
    std::vector<cplx> t;  // T_{-2}(j) for j = 0..N+3
    double scale = 0.0;   // max |T(1..N)|
};

TValues tabulate(double e, const ChainParams& p) {
    TValues tv;
    tv.cd = characterize(coeffs_from_energy(e, p));
    tv.t.resize(static_cast<std::size_t>(p.n) + 4);
    for (std::size_t j = 0; j < tv.t.size(); ++j) tv.t[j] = t_minus2(static_cast<long>(j), tv.cd);
    for (int j = 1; j <= p.n; ++j) tv.scale = std::max(tv.scale, std::abs(tv.t[static_cast<std::size_t>(j)]));
    tv.scale = std::max(tv.scale, 1e-300);
    return tv;
}

}  // namespace

std::vector<double> eigenvector_tetranacci(double e, const ChainParams& p, double g_m2) {
    if (p.n < 1) throw PreconditionError("eigenvector_tetranacci: n must be >= 1");
    const auto tv = tabulate(e, p);
    const long n = p.n;
    const cplx tn1 = tv.t[static_cast<std::size_t>(n + 1)];
    const cplx tn2 = tv.t[static_cast<std::size_t>(n + 2)];
    const double tol = 1e-10 * tv.scale;
    if (std::abs(tn1) <= tol && std::abs(tn2) <= tol) {
        throw DegenerateModeError("eigenvector_tetranacci: T(N+1) and T(N+2) both vanish; use degenerate_pair_basis");
    }
    const cplx norm = std::abs(tn2) > tol ? tn2 : -tn1;

    std::vector<double> xi(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j) {
        const std::array<BilinearTerm, 2> terms{{{1.0, j, n + 2}, {-1.0, n + 1, j + 1}}};
        xi[static_cast<std::size_t>(j - 1)] = (g_m2 * t_minus2_bilinear(terms, tv.cd) / norm).real();
    }
    return xi;
}

std::pair<std::vector<double>, std::vector<double>> degenerate_pair_basis(double e, const ChainParams& p) {
    if (p.n < 1) throw PreconditionError("degenerate_pair_basis: n must be >= 1");
    const auto tv = tabulate(e, p);
    std::vector<double> a(static_cast<std::size_t>(p.n)), b(static_cast<std::size_t>(p.n));
    for (int j = 1; j <= p.n; ++j) {
        a[static_cast<std::size_t>(j - 1)] = tv.t[static_cast<std::size_t>(j)].real();
        b[static_cast<std::size_t>(j - 1)] = tv.t[static_cast<std::size_t>(j + 1)].real();
    }
    return {std::move(a), std::move(b)};
}

Arrow arrow_classify(double zeta, double eta, double boundary_tol) noexcept {
    const double ae = std::abs(eta);
    const double upper = 2.0 - 2.0 * ae - zeta;        // >= 0 below the two straight edges
    const double lower = zeta + 2.0 + eta * eta / 4.0;  // >= 0 above the parabola
    if (std::abs(upper) <= boundary_tol) return Arrow::Boundary;
    if (ae <= 4.0 && std::abs(lower) <= boundary_tol) return Arrow::Boundary;
    return (ae <= 4.0 && upper > 0.0 && lower > 0.0) ? Arrow::Inside : Arrow::Outside;
}

NewtonResult refine_wavevectors(cplx k1, cplx k2, int s_q, const ChainParams& p) {
    if (p.t2 == 0.0) throw ZeroT2Error("refine_wavevectors: t2 = 0");
    const double m = p.n + 2.0;
    const double target = -p.t1 / (2.0 * p.t2);
    const double s = s_q >= 0 ? 1.0 : -1.0;

    const auto f = [&](cplx x) { return std::sin(m * x) / std::sin(x); };
    const auto df = [&](cplx x) {
        const cplx sx = std::sin(x);
        return (m * std::cos(m * x) * sx - std::sin(m * x) * std::cos(x)) / (sx * sx);
    };

    NewtonResult out{k1, k2, 0, false, 0.0};
    for (int it = 0; it < 50; ++it) {
        const cplx x1 = out.k1 * p.d, x2 = out.k2 * p.d;
        const cplx xp = (x1 + x2) / 2.0, xm = (x1 - x2) / 2.0;
        const cplx f1 = std::cos(x1) + std::cos(x2) - target;
        const cplx f2 = f(xp) - s * f(xm);
        const double fscale = std::max({std::abs(f(xp)), std::abs(f(xm)), 1.0});
        out.residual = std::max(std::abs(f1), std::abs(f2) / fscale);
        out.iterations = it;
        if (out.residual < 1e-12) {
            out.converged = true;
            return out;
        }
        const cplx j11 = -std::sin(x1), j12 = -std::sin(x2);
        const cplx j21 = (df(xp) - s * df(xm)) / 2.0;
        const cplx j22 = (df(xp) + s * df(xm)) / 2.0;
        const cplx det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300) return out;
        const cplx d1 = (f1 * j22 - j12 * f2) / det;
        const cplx d2 = (j11 * f2 - j21 * f1) / det;
        out.k1 -= d1 / p.d;
        out.k2 -= d2 / p.d;
        if (std::abs(d1) + std::abs(d2) < 1e-15) {
            out.converged = true;
            out.iterations = it + 1;
            return out;
        }
    }
    return out;
}

}  // namespace tetra
