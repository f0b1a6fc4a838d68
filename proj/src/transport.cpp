#include "tetra/transport.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <string>

#include "tetra/chain.hpp"
#include "tetra/errors.hpp"

namespace tetra {

namespace {

constexpr cplx kI{0.0, 1.0};

// Linear combination of T_{-2}(index).
using LinearForm = std::map<long, cplx>;

LinearForm combine(std::initializer_list<std::pair<cplx, LinearForm>> parts) {
    LinearForm out;
    for (const auto& [coef, form] : parts)
        for (const auto& [idx, v] : form) out[idx] += coef * v;
    return out;
}

// T_1(j) = -T_{-2}(j+1)
LinearForm t_plus1(long j) { return {{j + 1, -1.0}}; }
// T_{-1}(j) = T_{-2}(j-1) - eta T_{-2}(j)
LinearForm t_minus1(long j, cplx eta) { return {{j - 1, 1.0}, {j, -eta}}; }

void product(const LinearForm& x, const LinearForm& y, cplx sign, std::vector<BilinearTerm>& out) {
    for (const auto& [m, cm] : x)
        for (const auto& [n, cn] : y) out.push_back({sign * cm * cn, m, n});
}

cplx evaluate(const LinearForm& f, const CharacteristicData& cd) {
    cplx acc{};
    for (const auto& [idx, v] : f) acc += v * t_minus2(idx, cd);
    return acc;
}

ComplexMatrix resolvent_matrix(double e, const TransportSetup& s) {
    const auto h = build_chain_matrix(s.chain);
    const std::size_t n = h.rows();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? e : 0.0) - h(i, j);
    a(0, 0) -= cplx(s.left.lambda, -s.left.gamma);
    a(n - 1, n - 1) -= cplx(s.right.lambda, -s.right.gamma);
    return a;
}

bool closed_form_applicable(const TransportSetup& s) { return s.chain.n >= 3 && s.chain.t2 != 0.0; }

}  // namespace

cplx BoundarySolution::sigma(long j) const {
    return g_m2 * basic_closed(-2, j, cd) + g1 * (basic_closed(1, j, cd) + kappa_l * basic_closed(-1, j, cd));
}

BoundarySolution solve_boundary(double e, const TransportSetup& s) {
    const auto& p = s.chain;
    if (p.n < 3) throw PreconditionError("solve_boundary: closed form needs N >= 3");
    BoundarySolution sol;
    sol.cd = characterize(coeffs_from_energy(e, p));
    const cplx eta = sol.cd.coeffs.eta;
    const long n = p.n;
    sol.kappa_l = (kI * s.left.gamma - s.left.lambda) / p.t2;
    sol.rho = kI * s.right.gamma - s.right.lambda;
    const cplx kap = sol.kappa_l, rho = sol.rho, t2 = p.t2;

    const LinearForm fa{{n + 1, 1.0}};
    const LinearForm fb = combine({{1.0, t_plus1(n + 1)}, {kap, t_minus1(n + 1, eta)}});
    const LinearForm fc = combine({{rho, LinearForm{{n, 1.0}}}, {-t2, LinearForm{{n + 2, 1.0}}}});
    const LinearForm fd = combine({{rho, t_plus1(n)}, {rho * kap, t_minus1(n, eta)}, {-t2, t_plus1(n + 2)}, {-t2 * kap, t_minus1(n + 2, eta)}});

    sol.a = evaluate(fa, sol.cd);
    sol.b = evaluate(fb, sol.cd);
    sol.c = evaluate(fc, sol.cd);
    sol.d = evaluate(fd, sol.cd);

    std::vector<BilinearTerm> terms;
    product(fa, fd, 1.0, terms);
    product(fb, fc, -1.0, terms);
    sol.det = t_minus2_bilinear(terms, sol.cd);

    if (!(std::abs(sol.det) > 0.0) || !std::isfinite(std::abs(sol.a / sol.det))) {
        throw SingularBoundaryError("solve_boundary: 2x2 boundary system is singular at E = " + std::to_string(e));
    }
    sol.g1 = sol.a / sol.det;
    sol.g_m2 = -sol.b / sol.det;
    return sol;
}

cplx green_1n_tetranacci(double e, const TransportSetup& s) { return solve_boundary(e, s).g1; }

cplx green_1n_dense(double e, const TransportSetup& s) {
    const auto n = static_cast<std::size_t>(s.chain.n);
    std::vector<cplx> rhs(n, 0.0);
    rhs[n - 1] = 1.0;
    return solve_complex(resolvent_matrix(e, s), std::move(rhs)).front();
}

ComplexMatrix green_dense(double e, const TransportSetup& s) {
    const auto a = resolvent_matrix(e, s);
    const std::size_t n = a.rows();
    ComplexMatrix g(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<cplx> rhs(n, 0.0);
        rhs[col] = 1.0;
        const auto x = solve_complex(a, std::move(rhs));
        for (std::size_t i = 0; i < n; ++i) g(i, col) = x[i];
    }
    return g;
}

double transmission_dense_trace(double e, const TransportSetup& s) {
    const auto g = green_dense(e, s);
    const std::size_t n = g.rows();
    ComplexMatrix gamma_l(n, n), gamma_r(n, n);
    gamma_l(0, 0) += 2.0 * s.left.gamma;
    gamma_r(n - 1, n - 1) += 2.0 * s.right.gamma;

    // Tr{Gamma_L G Gamma_R G^dagger}
    cplx tr{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (gamma_l(i, j) == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (gamma_r(k, l) == 0.0) continue;
                    // (G^dagger)(l, i) = conj(G(i, l))
                    tr += gamma_l(i, j) * g(j, k) * gamma_r(k, l) * std::conj(g(i, l));
                }
        }
    return tr.real();
}

double transmission(double e, const TransportSetup& s) {
    if (s.left.gamma == 0.0 || s.right.gamma == 0.0) return 0.0;
    const cplx g = closed_form_applicable(s) ? green_1n_tetranacci(e, s) : green_1n_dense(e, s);
    return 4.0 * s.left.gamma * s.right.gamma * std::norm(g);
}

double current(double v_bias, double beta, const TransportSetup& s, double tolerance) {
    if (!(beta > 0.0)) throw PreconditionError("current: beta must be positive or kZeroTemperature");
    if (v_bias == 0.0) return 0.0;

    const bool zero_t = std::isinf(beta);
    const auto fermi = [beta](double e) {
        const double x = beta * e;
        return x > 0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
    };

    double lo = std::min(0.0, -v_bias);
    double hi = std::max(0.0, -v_bias);
    if (!zero_t) {
        // |f(E) - f(E + V)| <= 1e-12 beyond ln(1e12)/beta of the bias window (plus a margin)
        const double tail = (std::log(1e12) + 2.0) / beta;
        lo -= tail;
        hi += tail;
    }

    const auto integrand = [&](double e) {
        const double occ = zero_t ? (v_bias > 0 ? 1.0 : -1.0) : fermi(e) - fermi(e + v_bias);
        if (occ == 0.0) return 0.0;
        return transmission(e, s) * occ;
    };

    // Resonances sit near the isolated-chain levels; split there so each panel is smooth.
    std::vector<double> cuts{lo};
    for (const auto& mode : spectrum(s.chain)) {
        const double e = mode.e;
        if (e > lo && e < hi) cuts.push_back(e);
    }
    cuts.push_back(hi);
    // The occupation difference changes over a width 1/beta around 0 and -V.
    for (double edge : {0.0, -v_bias}) {
        for (double offset : {-4.0, 0.0, 4.0}) {
            const double e = zero_t ? edge : edge + offset / beta;
            if (e > lo && e < hi) cuts.push_back(e);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Integrate each panel on [-1, 1] and rescale: the library reports its error estimate in
    // the mapped variable, which on narrow panels would otherwise look far too large.
    using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
    const auto panel = [&](std::size_t k, unsigned depth, double tol, double* err, double* l1) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        const double half = 0.5 * (cuts[k + 1] - cuts[k]);
        const auto mapped = [&](double x) { return integrand(mid + half * x); };
        const double value = half * Rule::integrate(mapped, -1.0, 1.0, depth, tol, err, l1);
        *err *= half;
        *l1 *= half;
        return value;
    };

    // The library's stopping rule is relative to each panel's own L1 norm, which tail panels
    // with a negligible contribution can never satisfy. A coarse pass gives the global scale.
    const std::size_t panels = cuts.size() - 1;
    std::vector<double> coarse_l1(panels);
    double scale = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        double err = 0.0;
        panel(k, 0, tolerance, &err, &coarse_l1[k]);
        scale += coarse_l1[k];
    }

    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        double err = 0.0;
        double l1 = 0.0;
        const double tol = coarse_l1[k] > 0.0 ? std::min(1.0, tolerance * scale / coarse_l1[k]) : 1.0;
        total += panel(k, 15, tol, &err, &l1);
        total_err += err;
    }
    if (!std::isfinite(total) || total_err > std::max(100.0 * tolerance * std::abs(total), 1e-13)) {
        throw QuadratureError("current: quadrature error estimate " + std::to_string(total_err) + " too large");
    }
    return total;
}

double conductance(const TransportSetup& s) { return transmission(0.0, s); }

}  // namespace tetra
