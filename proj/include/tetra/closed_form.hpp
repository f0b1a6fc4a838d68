#pragma once
// Closed forms of symmetric Tetranacci sequences in terms of the two
// generalized Fibonacci polynomials phi_1, phi_2 attached to the roots
// S_1, S_2 of S^2 - eta S - (zeta + 2) = 0.

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

#include "tetra/recurrence.hpp"

namespace tetra {

enum class RootClass { Distinct, DegenerateS, DegenerateUnit };

[[nodiscard]] const char* to_string(RootClass c) noexcept;

/// Default relative gap below which S_1 and S_2 are treated as equal.
inline constexpr double kDefaultClassEps = 1e-6;
/// Tolerance on |S^2 - 4| for the S = +-2 special forms.
inline constexpr double kUnitRootEps = 1e-9;

struct CharacteristicData {
    Coefficients coeffs;
    cplx s1, s2;
    cplx r_plus_1, r_minus_1, r_plus_2, r_minus_2;
    cplx theta1, theta2;
    RootClass cls = RootClass::Distinct;
    bool unit1 = false;
    bool unit2 = false;

    // Root used by the degenerate-class formulas: the mean eta/2 of S_1, S_2.
    cplx s_mean;
    cplx r_plus_mean, r_minus_mean;
    bool unit_mean = false;

    [[nodiscard]] cplx s(int l) const;
};

[[nodiscard]] CharacteristicData characterize(const Coefficients& c, double eps_class = kDefaultClassEps);

/// phi_l(j) for l in {1, 2}: Binet form, or j (S_l/2)^(j+1) when S_l = +-2.
[[nodiscard]] cplx phi(int l, long j, const CharacteristicData& cd);

/// Fibonacci polynomial of an arbitrary root S given its r_{+-}.
[[nodiscard]] cplx phi_root(cplx s, cplx r_plus, cplx r_minus, bool unit, long j) noexcept;

[[nodiscard]] cplx t_minus2(long j, const CharacteristicData& cd);

/// T_i(j), i in -2..1, from the class-appropriate closed form.
[[nodiscard]] cplx basic_closed(int i, long j, const CharacteristicData& cd);

[[nodiscard]] cplx xi_closed(const InitialValues& g, long j, const CharacteristicData& cd);

/// Plane-wave amplitudes (A, B, C, D) of r_{+1}, r_{-1}, r_{+2}, r_{-2}.
[[nodiscard]] std::array<cplx, 4> plane_wave_coeffs(const InitialValues& g, const CharacteristicData& cd);

struct CandidateResidual {
    std::string name;
    double max_residual = 0.0;
    double max_magnitude = 0.0;
    [[nodiscard]] bool satisfies(double rel_tol = 1e-9) const noexcept {
        return max_residual < rel_tol * std::max(1.0, max_magnitude);
    }
};

/// Recursion residuals of the extra degenerate-root solutions j r^j, j^2 r^j, j^3 r^j
/// (the latter two only meaningful at S = +-2) over [lo, hi].
[[nodiscard]] std::vector<CandidateResidual> appendix_a_solutions(const CharacteristicData& cd, long lo, long hi);

/// One term coef * T_{-2}(m) * T_{-2}(n) of a bilinear form.
struct BilinearTerm {
    cplx coef;
    long m;
    long n;
};

/// Sum of coef * T_{-2}(m) T_{-2}(n). In the Distinct class the products are
/// expanded in phi_1, phi_2 and same-root pairs with equal m + n are merged with
/// phi(m)phi(n) - phi(m0)phi(n0) = -phi(p)phi(q), which avoids the cancellation
/// that a direct evaluation suffers once evanescent solutions dominate.
[[nodiscard]] cplx t_minus2_bilinear(std::span<const BilinearTerm> terms, const CharacteristicData& cd);

}  // namespace tetra
