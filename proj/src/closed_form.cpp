#include "tetra/closed_form.hpp"

#include <cmath>
#include <map>

#include "tetra/dense.hpp"
#include "tetra/errors.hpp"

namespace tetra {

namespace {

cplx ipow(cplx base, long e) noexcept {
    if (e < 0) return 1.0 / ipow(base, -e);
    cplx result = 1.0;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

struct RootPair {
    cplx plus, minus;
};

RootPair unimodular_roots(cplx s) {
    const cplx w = std::sqrt(s * s - 4.0);
    return {(s + w) / 2.0, (s - w) / 2.0};
}

bool is_unit_root(cplx s) noexcept { return std::abs(s * s - 4.0) <= kUnitRootEps; }

// arccos(S/2) with Re in [0, pi] and non-negative imaginary part. For real S the
// conjugate is again a solution; for genuinely complex S the sign is flipped instead.
cplx angle_of(cplx s) {
    cplx th = std::acos(s / 2.0);
    if (th.imag() < 0.0) th = (s.imag() == 0.0) ? std::conj(th) : -th;
    return th;
}

double window_scale(const SequenceWindow& w) { return std::max(1.0, w.max_abs()); }

}  // namespace

const char* to_string(RootClass c) noexcept {
    switch (c) {
        case RootClass::Distinct: return "Distinct";
        case RootClass::DegenerateS: return "DegenerateS";
        case RootClass::DegenerateUnit: return "DegenerateUnit";
    }
    return "?";
}

cplx CharacteristicData::s(int l) const {
    if (l == 1) return s1;
    if (l == 2) return s2;
    throw IndexRangeError("root index must be 1 or 2, got " + std::to_string(l));
}

CharacteristicData characterize(const Coefficients& c, double eps_class) {
    if (!(eps_class > 0.0)) throw PreconditionError("characterize: eps_class must be positive");
    CharacteristicData cd;
    cd.coeffs = c;
    const cplx disc = std::sqrt(c.eta * c.eta + 4.0 * (c.zeta + 2.0));
    cd.s1 = (c.eta + disc) / 2.0;
    cd.s2 = (c.eta - disc) / 2.0;

    const auto r1 = unimodular_roots(cd.s1);
    const auto r2 = unimodular_roots(cd.s2);
    cd.r_plus_1 = r1.plus;
    cd.r_minus_1 = r1.minus;
    cd.r_plus_2 = r2.plus;
    cd.r_minus_2 = r2.minus;
    cd.theta1 = angle_of(cd.s1);
    cd.theta2 = angle_of(cd.s2);
    cd.unit1 = is_unit_root(cd.s1);
    cd.unit2 = is_unit_root(cd.s2);

    cd.s_mean = c.eta / 2.0;
    const auto rm = unimodular_roots(cd.s_mean);
    cd.r_plus_mean = rm.plus;
    cd.r_minus_mean = rm.minus;
    cd.unit_mean = is_unit_root(cd.s_mean);

    const double scale = std::max({1.0, std::abs(cd.s1), std::abs(cd.s2)});
    if (std::abs(cd.s1 - cd.s2) <= eps_class * scale) {
        cd.cls = cd.unit_mean ? RootClass::DegenerateUnit : RootClass::DegenerateS;
    } else {
        cd.cls = RootClass::Distinct;
    }
    return cd;
}

cplx phi_root(cplx s, cplx r_plus, cplx r_minus, bool unit, long j) noexcept {
    if (unit) {
        // limit of the Binet quotient at S = +-2
        return static_cast<double>(j) * ipow(s / 2.0, j + 1);
    }
    return (ipow(r_plus, j) - ipow(r_minus, j)) / (r_plus - r_minus);
}

cplx phi(int l, long j, const CharacteristicData& cd) {
    if (l == 1) return phi_root(cd.s1, cd.r_plus_1, cd.r_minus_1, cd.unit1, j);
    if (l == 2) return phi_root(cd.s2, cd.r_plus_2, cd.r_minus_2, cd.unit2, j);
    throw IndexRangeError("phi: root index must be 1 or 2, got " + std::to_string(l));
}

namespace {

cplx phi_mean(long j, const CharacteristicData& cd) noexcept {
    return phi_root(cd.s_mean, cd.r_plus_mean, cd.r_minus_mean, cd.unit_mean, j);
}

}  // namespace

cplx t_minus2(long j, const CharacteristicData& cd) {
    const double jd = static_cast<double>(j);
    switch (cd.cls) {
        case RootClass::Distinct:
            return (phi(2, j, cd) - phi(1, j, cd)) / (cd.s1 - cd.s2);
        case RootClass::DegenerateS: {
            const cplx s = cd.s_mean;
            return ((1.0 - jd) * phi_mean(j + 1, cd) + (1.0 + jd) * phi_mean(j - 1, cd)) / (s * s - 4.0);
        }
        case RootClass::DegenerateUnit:
            return cd.s_mean * (1.0 - jd * jd) * phi_mean(j, cd) / 12.0;
    }
    return {};
}

cplx basic_closed(int i, long j, const CharacteristicData& cd) {
    if (i < -2 || i > 1) throw IndexRangeError("basic_closed: index must lie in [-2, 1], got " + std::to_string(i));
    if (i == -2) return t_minus2(j, cd);
    const double jd = static_cast<double>(j);

    switch (cd.cls) {
        case RootClass::Distinct: {
            const cplx s1 = cd.s1, s2 = cd.s2, delta = s1 - s2;
            const cplx p1j = phi(1, j, cd), p2j = phi(2, j, cd);
            const cplx p1n = phi(1, j + 1, cd), p2n = phi(2, j + 1, cd);
            if (i == -1) return (p1n - p2n + s2 * p1j - s1 * p2j) / delta;
            if (i == 0) return (s1 * p2n - s2 * p1n + p2j - p1j) / delta;
            return (p1n - p2n) / delta;
        }
        case RootClass::DegenerateS: {
            const cplx s = cd.s_mean;
            const cplx den = s * s - 4.0;
            if (i == -1) return (3.0 * jd * phi_mean(j + 2, cd) - (jd + 2.0) * (s * s - 1.0) * phi_mean(j, cd)) / den;
            if (i == 0) {
                return (2.0 * (s * s - 1.0) * (jd + 2.0) * phi_mean(j + 1, cd) - 3.0 * (jd + 1.0) * s * phi_mean(j + 2, cd)) / den;
            }
            return (jd * phi_mean(j + 2, cd) - (jd + 2.0) * phi_mean(j, cd)) / den;
        }
        case RootClass::DegenerateUnit: {
            const cplx s = cd.s_mean;
            if (i == -1) return s * ((2.0 - jd) * jd * phi_mean(j - 1, cd) + 2.0 * s * (jd * jd - 1.0) * phi_mean(j, cd)) / 12.0;
            if (i == 0) {
                return s * ((3.0 + jd) * (1.0 + jd) * phi_mean(j + 2, cd) - 2.0 * s * (jd + 2.0) * jd * phi_mean(j + 1, cd)) / 12.0;
            }
            return s * (2.0 + jd) * jd * phi_mean(j + 1, cd) / 12.0;
        }
    }
    return {};
}

cplx xi_closed(const InitialValues& g, long j, const CharacteristicData& cd) {
    const cplx gm2 = g.at(-2), gm1 = g.at(-1), g0 = g.at(0), g1 = g.at(1);
    if (cd.cls == RootClass::Distinct) {
        const cplx s1 = cd.s1, s2 = cd.s2;
        const cplx num = phi(2, j, cd) * (gm2 - s1 * gm1 + g0) - phi(1, j, cd) * (gm2 - s2 * gm1 + g0) +
                         phi(1, j + 1, cd) * (gm1 - s2 * g0 + g1) - phi(2, j + 1, cd) * (gm1 - s1 * g0 + g1);
        return num / (s1 - s2);
    }
    cplx acc{};
    for (int i = -2; i <= 1; ++i) acc += g.at(i) * basic_closed(i, j, cd);
    return acc;
}

std::array<cplx, 4> plane_wave_coeffs(const InitialValues& g, const CharacteristicData& cd) {
    if (cd.cls != RootClass::Distinct || cd.unit1 || cd.unit2) {
        throw DegenerateRootsError("plane_wave_coeffs: needs four distinct roots r (S1 != S2 and S1, S2 != +-2)");
    }
    const std::array<cplx, 4> r{cd.r_plus_1, cd.r_minus_1, cd.r_plus_2, cd.r_minus_2};
    ComplexMatrix a(4, 4);
    std::vector<cplx> b(4);
    for (int i = -2; i <= 1; ++i) {
        const auto row = static_cast<std::size_t>(i + 2);
        for (std::size_t k = 0; k < 4; ++k) a(row, k) = ipow(r[k], i);
        b[row] = g.at(i);
    }
    const auto x = solve_complex(std::move(a), std::move(b));
    return {x[0], x[1], x[2], x[3]};
}

std::vector<CandidateResidual> appendix_a_solutions(const CharacteristicData& cd, long lo, long hi) {
    if (cd.cls == RootClass::Distinct) throw ClassMismatchError("appendix_a_solutions: requires a degenerate root class");
    if (lo > hi) throw IndexRangeError("appendix_a_solutions: lo > hi");

    struct Candidate {
        const char* name;
        cplx r;
        int power;
    };
    const std::array<Candidate, 4> candidates{{{"j*r+^j", cd.r_plus_mean, 1},
                                               {"j*r-^j", cd.r_minus_mean, 1},
                                               {"j^2*r+^j", cd.r_plus_mean, 2},
                                               {"j^3*r+^j", cd.r_plus_mean, 3}}};

    std::vector<CandidateResidual> out;
    for (const auto& cand : candidates) {
        SequenceWindow w;
        w.lo = lo - 2;
        for (long j = lo - 2; j <= hi + 2; ++j) {
            w.values.push_back(std::pow(static_cast<double>(j), cand.power) * ipow(cand.r, j));
        }
        CandidateResidual res;
        res.name = cand.name;
        res.max_residual = max_recursion_residual(w, cd.coeffs);
        res.max_magnitude = window_scale(w);
        out.push_back(res);
    }
    return out;
}

cplx t_minus2_bilinear(std::span<const BilinearTerm> terms, const CharacteristicData& cd) {
    if (cd.cls != RootClass::Distinct) {
        cplx acc{};
        for (const auto& t : terms) acc += t.coef * t_minus2(t.m, cd) * t_minus2(t.n, cd);
        return acc;
    }

    // Merge duplicate (m, n) pairs, then group by m + n.
    // The cancellation threshold is measured against the coefficients before
    // merging, otherwise a pair that cancels to rounding noise looks genuine.
    std::map<std::pair<long, long>, cplx> merged;
    std::map<long, double> weights;
    for (const auto& t : terms) {
        merged[{std::min(t.m, t.n), std::max(t.m, t.n)}] += t.coef;
        weights[t.m + t.n] += std::abs(t.coef);
    }
    std::map<long, std::vector<BilinearTerm>> groups;
    for (const auto& [key, coef] : merged) groups[key.first + key.second].push_back({coef, key.first, key.second});

    cplx acc{};
    for (const auto& [sum, group] : groups) {
        const long m0 = group.front().m, n0 = group.front().n;
        cplx total{};
        const double weight = weights[sum];
        for (const auto& t : group) {
            total += t.coef;
            const long p = ((t.m - t.n) + (m0 - n0)) / 2;
            const long q = ((t.m - t.n) - (m0 - n0)) / 2;
            // same-root products relative to the group reference pair
            acc -= t.coef * (phi(1, p, cd) * phi(1, q, cd) + phi(2, p, cd) * phi(2, q, cd));
            // mixed-root products
            acc -= t.coef * (phi(1, t.m, cd) * phi(2, t.n, cd) + phi(2, t.m, cd) * phi(1, t.n, cd));
        }
        // Analytically the group weights of a determinant-like form cancel; a genuine
        // remainder is restored explicitly.
        if (std::abs(total) > 1e-12 * weight) {
            acc += total * (phi(1, m0, cd) * phi(1, n0, cd) + phi(2, m0, cd) * phi(2, n0, cd));
        }
    }
    const cplx delta = cd.s1 - cd.s2;
    return acc / (delta * delta);
}

}  // namespace tetra
