#include "tetra/kitaev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tetra/errors.hpp"

namespace tetra {

KitaevCoefficients kitaev_effective_coeffs(double e, const KitaevParams& p) {
    const double t2_eff = p.t * p.t - p.delta * p.delta;
    if (t2_eff == 0.0) throw DegenerateCouplingError("kitaev_effective_coeffs: t^2 = Delta^2");
    KitaevCoefficients out;
    out.t1_eff = 2.0 * p.t * p.mu;
    out.t2_eff = t2_eff;
    out.coeffs.zeta = (e * e - p.mu * p.mu - 2.0 * p.t * p.t - 2.0 * p.delta * p.delta) / t2_eff;
    out.coeffs.eta = -out.t1_eff / t2_eff;
    return out;
}

std::pair<double, double> xy_effective_hoppings(const XYParams& p) noexcept {
    return {-2.0 * p.hfield * (p.jx + p.jy), p.jx * p.jy};
}

RealMatrix effective_h_matrix(const KitaevParams& p) {
    if (p.n < 2) throw PreconditionError("effective_h_matrix: n must be >= 2");
    const auto n = static_cast<std::size_t>(p.n);
    // a = i(Delta - t), b = i(Delta + t): -a^2 = (Delta - t)^2, -b^2 = (Delta + t)^2,
    // i mu (a - b) = 2 t mu, a b = t^2 - Delta^2.
    const double minus_a2 = (p.delta - p.t) * (p.delta - p.t);
    const double minus_b2 = (p.delta + p.t) * (p.delta + p.t);
    RealMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        h(j, j) = p.mu * p.mu + (j + 1 < n ? minus_a2 : 0.0) + (j > 0 ? minus_b2 : 0.0);
        if (j + 1 < n) h(j, j + 1) = h(j + 1, j) = 2.0 * p.t * p.mu;
        if (j + 2 < n) h(j, j + 2) = h(j + 2, j) = p.t * p.t - p.delta * p.delta;
    }
    return h;
}

RealMatrix kitaev_bdg_matrix(const KitaevParams& p) {
    if (p.n < 1) throw PreconditionError("kitaev_bdg_matrix: n must be >= 1");
    const auto n = static_cast<std::size_t>(p.n);
    RealMatrix m(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        m(j, j) = -p.mu;
        m(n + j, n + j) = p.mu;
        if (j + 1 < n) {
            m(j, j + 1) = m(j + 1, j) = -p.t;
            m(n + j, n + j + 1) = m(n + j + 1, n + j) = p.t;
            // pairing block D with D(j+1, j) = Delta, D(j, j+1) = -Delta, and -D below
            m(j + 1, n + j) = p.delta;
            m(j, n + j + 1) = -p.delta;
            m(n + j + 1, j) = -p.delta;
            m(n + j, j + 1) = p.delta;
        }
    }
    return m;
}

KitaevSpectrum kitaev_spectrum(const KitaevParams& p) {
    const auto h = effective_h_matrix(p);
    const auto eig = sym_eigen(h);
    const double scale = std::max(norm_inf(h), 1e-300);
    KitaevSpectrum out;
    out.h_eigenvalues = eig.values;
    for (double lam : eig.values) {
        if (lam < -1e-10 * scale) {
            throw NumericalError("kitaev_spectrum: h has a negative eigenvalue " + std::to_string(lam));
        }
        const double e = std::sqrt(std::max(lam, 0.0));
        out.energies.push_back(e);
        out.energies.push_back(-e);
    }
    std::sort(out.energies.begin(), out.energies.end());
    return out;
}

}  // namespace tetra
