#pragma once
// Spectral analysis of the open next-nearest-neighbour chain.

#include <utility>
#include <vector>

#include "tetra/chain_params.hpp"
#include "tetra/closed_form.hpp"
#include "tetra/recurrence.hpp"

namespace tetra {

enum class Arrow { Inside, Outside, Boundary };

[[nodiscard]] const char* to_string(Arrow a) noexcept;

struct EigenMode {
    double e = 0.0;
    cplx k1, k2;
    cplx k_plus, k_minus;
    int s_q = 0;       // +-1; 0 when undefined (t2 = 0)
    int lambda_i = 0;  // inversion parity +-1
    Arrow arrow = Arrow::Inside;
    double quant_residual = 0.0;
    std::vector<double> vector;  // xi_1 .. xi_N, unit norm
    bool degenerate = false;     // member of a numerically degenerate cluster
};

struct CrossingRecord {
    int n_idx = 0;
    int l_idx = 0;
    double k_plus = 0.0;
    double k_minus = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
    double t1_over_t2 = 0.0;
    double e = 0.0;  // at t2 = 1, mu = 0
};

struct QuantizationResult {
    double residual = 0.0;
    int s_q = 1;
};

[[nodiscard]] cplx dispersion(cplx k, const ChainParams& p) noexcept;

/// zeta = -(e + mu)/t2, eta = -t1/t2. Throws ZeroT2Error if t2 = 0.
[[nodiscard]] Coefficients coeffs_from_energy(double e, const ChainParams& p);

/// k_l = arccos(S_l / 2) / d with Re(k d) in [0, pi] and Im k >= 0.
[[nodiscard]] std::pair<cplx, cplx> wavevectors_from_energy(double e, const ChainParams& p);

/// sin(x (N+2)) / sin(x).
[[nodiscard]] cplx quantization_f(cplx x, int n);

/// Residual of f(k+) = s f(k-) minimised over s = +-1. Throws
/// RemovableSingularityError when sin(k+- d) vanishes to 1e-12.
[[nodiscard]] QuantizationResult quantization_residual(cplx k1, cplx k2, int n, double d = 1.0);

/// All N modes, ascending in energy.
[[nodiscard]] std::vector<EigenMode> spectrum(const ChainParams& p);

/// Exact spectrum for t1 = 0 (PreconditionError otherwise), ascending.
[[nodiscard]] std::vector<double> t1_zero_spectrum(const ChainParams& p);

/// Degenerate crossings for both signs of eta. Requires n >= 2.
[[nodiscard]] std::vector<CrossingRecord> crossings(int n, double d = 1.0);

/// Eigenvector of a non-degenerate mode from the closed-form bracket
///   g_{-2} / T(N+2) * [T(j) T(N+2) - T(N+1) T(j+1)],  j = 1..N,  T = T_{-2}.
/// Throws DegenerateModeError when both T(N+1) and T(N+2) vanish to 1e-10 of
/// max |T(1..N)|. If only T(N+2) vanishes the mode is proportional to T(j+1)
/// and is returned as g_{-2} T(j+1).
[[nodiscard]] std::vector<double> eigenvector_tetranacci(double e, const ChainParams& p, double g_m2 = 1.0);

/// The pair T_{-2}(j), T_{-2}(j+1), j = 1..N, spanning a degenerate eigenspace.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> degenerate_pair_basis(double e, const ChainParams& p);

/// Region of (zeta, eta) where both wavevectors are real: |eta| <= 4,
/// zeta <= 2 - 2|eta| and zeta >= -2 - eta^2/4. Points within boundary_tol (in
/// zeta) of a binding curve are reported as Boundary.
[[nodiscard]] Arrow arrow_classify(double zeta, double eta, double boundary_tol = 1e-9) noexcept;

struct NewtonResult {
    cplx k1, k2;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;
};

/// Newton polish of (k1, k2) on the equal-energy constraint and the quantization
/// condition with branch s_q (at most 50 steps, tolerance 1e-12).
[[nodiscard]] NewtonResult refine_wavevectors(cplx k1, cplx k2, int s_q, const ChainParams& p);

}  // namespace tetra
