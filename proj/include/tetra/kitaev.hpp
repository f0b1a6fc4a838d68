#pragma once
// Kitaev chain and XY chain mapped onto the four-term recursion.

#include <utility>
#include <vector>

#include "tetra/dense.hpp"
#include "tetra/recurrence.hpp"

namespace tetra {

struct KitaevParams {
    double mu = 0.0;
    double t = 1.0;
    double delta = 0.0;
    int n = 2;
};

struct XYParams {
    double jx = 1.0;
    double jy = 1.0;
    double hfield = 0.0;
};

struct KitaevCoefficients {
    Coefficients coeffs;
    double t1_eff = 0.0;  // 2 t mu
    double t2_eff = 0.0;  // t^2 - Delta^2
};

/// zeta = (E^2 - mu^2 - 2t^2 - 2Delta^2)/(t^2 - Delta^2), eta = -2 t mu/(t^2 - Delta^2).
/// Throws DegenerateCouplingError when t^2 = Delta^2.
[[nodiscard]] KitaevCoefficients kitaev_effective_coeffs(double e, const KitaevParams& p);

/// (t1_eff, t2_eff) = (-2h(Jx + Jy), Jx Jy).
[[nodiscard]] std::pair<double, double> xy_effective_hoppings(const XYParams& p) noexcept;

/// Real symmetric N x N matrix h with h v = E^2 v.
[[nodiscard]] RealMatrix effective_h_matrix(const KitaevParams& p);

/// 2N x 2N Bogoliubov-de Gennes matrix of the open Kitaev chain.
[[nodiscard]] RealMatrix kitaev_bdg_matrix(const KitaevParams& p);

struct KitaevSpectrum {
    std::vector<double> h_eigenvalues;  // ascending, E^2 values
    std::vector<double> energies;       // +-sqrt(max(lambda, 0)), ascending, 2N entries
};

/// Spectrum via h. Throws NumericalError if an eigenvalue of h is below -1e-10 * ||h||.
[[nodiscard]] KitaevSpectrum kitaev_spectrum(const KitaevParams& p);

}  // namespace tetra
