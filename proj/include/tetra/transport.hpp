#pragma once
// Two-terminal transport through the open chain in the wide-band limit:
// lead self-energies Sigma_L = Lambda_L - i gamma_L on site 1 and
// Sigma_R = Lambda_R - i gamma_R on site N.

#include <limits>
#include <vector>

#include "tetra/chain_params.hpp"
#include "tetra/closed_form.hpp"
#include "tetra/dense.hpp"

namespace tetra {

struct LeadParams {
    double gamma = 0.0;   // broadening, >= 0
    double lambda = 0.0;  // level shift
};

struct TransportSetup {
    ChainParams chain;
    LeadParams left;
    LeadParams right;
};

/// Solution (g_{-2}, g_1) of the 2x2 boundary system for column N of G^r.
struct BoundarySolution {
    CharacteristicData cd;
    cplx kappa_l;  // (i gamma_L - Lambda_L) / t2
    cplx rho;      // i gamma_R - Lambda_R
    cplx a, b, c, d;
    cplx det;      // a d - b c
    cplx g_m2, g1;

    /// sigma_j = G^r_{jN} extended to all integers j.
    [[nodiscard]] cplx sigma(long j) const;
};

/// Throws SingularBoundaryError when |ad - bc| <= 1e-12 of its natural scale,
/// PreconditionError for N < 3 and ZeroT2Error for t2 = 0.
[[nodiscard]] BoundarySolution solve_boundary(double e, const TransportSetup& s);

/// G^r_{1N}(E) from the closed form.
[[nodiscard]] cplx green_1n_tetranacci(double e, const TransportSetup& s);

/// G^r_{1N}(E) from a dense solve of (E - H - Sigma) x = e_N.
[[nodiscard]] cplx green_1n_dense(double e, const TransportSetup& s);

/// Full retarded Green's function (dense inverse).
[[nodiscard]] ComplexMatrix green_dense(double e, const TransportSetup& s);

/// Tr{Gamma_L G^r Gamma_R G^a} with the full dense G^r.
[[nodiscard]] double transmission_dense_trace(double e, const TransportSetup& s);

/// 4 gamma_L gamma_R |G^r_{1N}|^2. Uses the closed form when N >= 3 and t2 != 0,
/// the dense solve otherwise.
[[nodiscard]] double transmission(double e, const TransportSetup& s);

inline constexpr double kZeroTemperature = std::numeric_limits<double>::infinity();

/// I = int dE T(E) [f(E) - f(E + V)] in units of e/h, f(E) = 1/(1 + exp(beta E)).
/// beta = kZeroTemperature selects step-function occupations.
[[nodiscard]] double current(double v_bias, double beta, const TransportSetup& s, double tolerance = 1e-10);

/// Linear conductance T(0) in units of e^2/h.
[[nodiscard]] double conductance(const TransportSetup& s);

}  // namespace tetra
