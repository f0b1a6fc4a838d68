#include "tetra/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tetra/bipoly.hpp"
#include "tetra/chain.hpp"
#include "tetra/dense.hpp"
#include "tetra/errors.hpp"
#include "tetra/kitaev.hpp"
#include "tetra/recurrence.hpp"
#include "tetra/table.hpp"
#include "tetra/transport.hpp"

namespace tetra {

bool VerifyReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"lemmata", "closed-form", "oracle", "transport", "all"};
    return names;
}

namespace {

class Recorder {
public:
    Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

    void check(const std::string& name, bool pass, const std::string& detail = {}) {
        report_.checks.push_back({suite_, name, pass, detail});
    }
    // pass iff worst < tol; detail reports the worst value
    void bound(const std::string& name, double worst, double tol) {
        check(name, std::isfinite(worst) && worst < tol, "worst " + format_double(worst) + " (tol " + format_double(tol) + ")");
    }

private:
    VerifyReport& report_;
    std::string suite_;
};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }
};

// Coefficients drawn from each root class.
std::vector<Coefficients> class_samples(Rng& rng, int per_class) {
    std::vector<Coefficients> out;
    for (int k = 0; k < per_class; ++k) out.push_back({rng.complex(2.0), rng.complex(2.0)});
    for (int k = 0; k < per_class; ++k) {
        const cplx eta = rng.complex(2.0);
        out.push_back({-2.0 - eta * eta / 4.0, eta});
    }
    out.push_back({-6.0, 4.0});
    out.push_back({-6.0, -4.0});
    return out;
}

double window_rel(cplx a, cplx b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

void suite_lemmata(VerifyReport& rep) {
    Recorder r(rep, "lemmata");
    const auto T = [](int i, long j) { return tetranacci_poly(i, j); };
    bool l1 = true, l2 = true;
    for (long j = -12; j <= 12; ++j) {
        l1 = l1 && verify_identity(T(1, j), T(-2, -1 - j)) && verify_identity(T(0, j), T(-1, -1 - j)) &&
             verify_identity(T(-1, j), T(0, -1 - j)) && verify_identity(T(-2, j), T(1, -1 - j));
        const BiPoly eta = BiPoly::eta();
        l2 = l2 && verify_identity(T(-2, j), -T(-2, -j)) && verify_identity(T(-1, j), T(-2, j - 1) - eta * T(-2, j)) &&
             verify_identity(T(0, j), eta * T(-2, j + 1) - T(-2, j + 2)) && verify_identity(T(1, j), -T(-2, j + 1));
    }
    r.check("lemma1_exact_j-12..12", l1);
    r.check("lemma2_exact_j-12..12", l2);

    const BiPoly z = BiPoly::zeta(), e = BiPoly::eta(), one(1);
    bool table = true;
    for (int i = -2; i <= 1; ++i)
        for (long j = -2; j <= 1; ++j) table = table && (T(i, j) == (i == j ? one : BiPoly{}));
    table = table && T(-2, 2) == -one && T(-1, 2) == e && T(0, 2) == z && T(1, 2) == e;
    table = table && T(-2, -3) == e && T(-1, -3) == z && T(0, -3) == e && T(1, -3) == -one;
    r.check("table1_columns_j-3..2", table);

    // Corollary 1 with integer initial data
    bool cor = true;
    const std::array<long, 4> g{3, -2, 5, 7};
    std::vector<BiPoly> seq(40);
    const auto at = [&](long j) -> BiPoly& { return seq[static_cast<std::size_t>(j + 2)]; };
    for (int i = -2; i <= 1; ++i) at(i) = BiPoly(g[static_cast<std::size_t>(i + 2)]);
    for (long j = 2; j < 37; ++j) at(j) = z * at(j - 2) - at(j - 4) + e * (at(j - 1) + at(j - 3));
    for (long j = -2; j < 37; ++j) {
        BiPoly sum;
        for (int i = -2; i <= 1; ++i) sum = sum + BiPoly(g[static_cast<std::size_t>(i + 2)]) * T(i, j);
        cor = cor && verify_identity(at(j), sum);
    }
    r.check("corollary1_polynomial_identity", cor);
}

void suite_closed_form(VerifyReport& rep, Rng& rng, const Implementation& impl) {
    Recorder r(rep, "closed-form");
    const auto samples = class_samples(rng, 20);

    double w_t2 = 0.0, w_basic = 0.0, w_xi = 0.0, w_l1 = 0.0, w_l2 = 0.0, w_inv = 0.0;
    for (const auto& c : samples) {
        const auto cd = characterize(c);
        InitialValues g;
        for (auto& x : g.g) x = rng.complex(1.0);
        const auto ref = eval_range(g, c, -25, 25);
        const double scale = ref.max_abs();
        for (long j = -20; j <= 20; ++j) w_xi = std::max(w_xi, window_rel(xi_closed(g, j, cd), ref.at(j), scale));

        std::array<SequenceWindow, 4> basic;
        for (int i = -2; i <= 1; ++i) basic[static_cast<std::size_t>(i + 2)] = eval_range(InitialValues::unit(i), c, -27, 27);
        const auto tref = [&](int i, long j) { return basic[static_cast<std::size_t>(i + 2)].at(j); };
        const double tscale = std::max({basic[0].max_abs(), basic[1].max_abs(), basic[2].max_abs(), basic[3].max_abs()});
        for (long j = -25; j <= 25; ++j) {
            w_t2 = std::max(w_t2, window_rel(impl.t_minus2(j, cd), tref(-2, j), tscale));
            for (int i = -2; i <= 1; ++i) w_basic = std::max(w_basic, window_rel(basic_closed(i, j, cd), tref(i, j), tscale));
        }
        for (long j = -15; j <= 15; ++j) {
            w_l1 = std::max(w_l1, window_rel(basic_closed(1, j, cd), basic_closed(-2, -1 - j, cd), tscale));
            w_l1 = std::max(w_l1, window_rel(basic_closed(0, j, cd), basic_closed(-1, -1 - j, cd), tscale));
            const auto t2 = [&](long k) { return impl.t_minus2(k, cd); };
            w_l2 = std::max(w_l2, window_rel(t2(j), -t2(-j), tscale));
            w_l2 = std::max(w_l2, window_rel(basic_closed(-1, j, cd), t2(j - 1) - c.eta * t2(j), tscale));
            w_l2 = std::max(w_l2, window_rel(basic_closed(0, j, cd), c.eta * t2(j + 1) - t2(j + 2), tscale));
            w_l2 = std::max(w_l2, window_rel(basic_closed(1, j, cd), -t2(j + 1), tscale));
        }
        const double sc = std::max(1.0, std::abs(c.zeta) + std::abs(c.eta));
        w_inv = std::max({w_inv, std::abs(cd.s1 + cd.s2 - c.eta) / sc, std::abs(cd.s1 * cd.s2 + c.zeta + 2.0) / (sc * sc)});
        for (int l = 1; l <= 2; ++l) {
            const cplx rp = l == 1 ? cd.r_plus_1 : cd.r_plus_2;
            const cplx rm = l == 1 ? cd.r_minus_1 : cd.r_minus_2;
            const cplx th = l == 1 ? cd.theta1 : cd.theta2;
            const double s = std::max(1.0, std::abs(cd.s(l)));
            w_inv = std::max({w_inv, std::abs(rp * rm - 1.0), std::abs(rp + rm - cd.s(l)) / s, std::abs(2.0 * std::cos(th) - cd.s(l)) / s});
        }
    }
    r.bound("t_minus2_vs_recursion", w_t2, 1e-9);
    r.bound("basic_closed_vs_recursion", w_basic, 1e-9);
    r.bound("xi_closed_vs_recursion", w_xi, 1e-9);
    r.bound("lemma1_numeric", w_l1, 1e-9);
    r.bound("lemma2_numeric", w_l2, 1e-9);
    r.bound("characteristic_invariants", w_inv, 1e-10);

    // phi is odd and obeys the four-term recursion
    double w_odd = 0.0, w_thm1 = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Coefficients c{rng.complex(2.0), rng.complex(2.0)};
        const auto cd = characterize(c);
        for (int l = 1; l <= 2; ++l) {
            SequenceWindow w;
            w.lo = -17;
            for (long j = -17; j <= 17; ++j) w.values.push_back(phi(l, j, cd));
            const double s = std::max(1.0, w.max_abs());
            for (long j = 0; j <= 17; ++j) w_odd = std::max(w_odd, std::abs(w.at(j) + w.at(-j)) / s);
            w_thm1 = std::max(w_thm1, max_recursion_residual(w, c) / s);
        }
    }
    r.bound("phi_odd", w_odd, 1e-10);
    r.bound("phi_four_term_recursion", w_thm1, 1e-9);

    // Distinct and degenerate formulas agree just outside the switching gap
    double w_cont = 0.0;
    for (int k = 0; k < 20; ++k) {
        const cplx eta = rng.complex(2.0);
        const double scale = std::max(1.0, std::abs(eta) / 2.0);
        const cplx gap = 10.0 * kDefaultClassEps * scale * std::polar(1.0, rng.uniform(0.0, 6.283185307179586));
        // S1 - S2 = gap  <=>  eta^2 + 4(zeta + 2) = gap^2
        const Coefficients c{(gap * gap - eta * eta) / 4.0 - 2.0, eta};
        auto cd = characterize(c);
        auto cd_deg = cd;
        cd_deg.cls = cd.unit_mean ? RootClass::DegenerateUnit : RootClass::DegenerateS;
        cd.cls = RootClass::Distinct;
        double mx = 0.0;
        for (long j = -10; j <= 10; ++j) mx = std::max(mx, std::abs(t_minus2(j, cd)));
        for (long j = -10; j <= 10; ++j) w_cont = std::max(w_cont, std::abs(t_minus2(j, cd) - t_minus2(j, cd_deg)) / std::max(1.0, mx));
    }
    r.bound("class_continuity", w_cont, 1e-6);
}

void suite_oracle(VerifyReport& rep, Rng& rng) {
    Recorder r(rep, "oracle");

    double w_res = 0.0, w_orth = 0.0;
    for (int n : {1, 2, 5, 17, 40}) {
        RealMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
        const auto eig = sym_eigen(m);
        const double mn = norm_inf(m);
        for (int k = 0; k < n; ++k) {
            const auto v = eig.vector(static_cast<std::size_t>(k));
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = -eig.values[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
                res += s * s;
            }
            w_res = std::max(w_res, std::sqrt(res) / mn);
            for (int l = 0; l < n; ++l) {
                double d = 0.0;
                for (int i = 0; i < n; ++i) d += eig.vectors(i, k) * eig.vectors(i, l);
                w_orth = std::max(w_orth, std::abs(d - (k == l ? 1.0 : 0.0)));
            }
        }
    }
    r.bound("sym_eigen_residual", w_res, 1e-10);
    r.bound("sym_eigen_orthonormal", w_orth, 1e-10);

    double w_t10 = 0.0;
    for (int n : {4, 5, 20, 21})
        for (double mu : {0.0, 0.7})
            for (double t2 : {1.0, -2.0}) {
                const ChainParams p{mu, 0.0, t2, n, 1.0};
                const auto exact = t1_zero_spectrum(p);
                const auto dense = sym_eigen(build_chain_matrix(p)).values;
                for (std::size_t k = 0; k < exact.size(); ++k) w_t10 = std::max(w_t10, std::abs(exact[k] - dense[k]));
            }
    r.bound("t1_zero_spectrum_vs_dense", w_t10, 1e-10);

    bool counts = true;
    for (int n = 2; n <= 20; ++n) {
        const std::size_t expect = static_cast<std::size_t>(n % 2 == 0 ? n * n / 4 : (n * n - 1) / 4);
        counts = counts && crossings(n).size() == expect;
    }
    r.check("crossing_counts_N2..20", counts);

    double w_quant = 0.0, w_energy = 0.0, w_vec = 0.0;
    int parity_violations = 0, modes_seen = 0;
    for (int draw = 0; draw < 10; ++draw) {
        const int n = rng.integer(3, 25);
        const double t2 = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.0);
        const ChainParams p{rng.uniform(-1.0, 1.0), rng.uniform(-3.0, 3.0), t2, n, 1.0};
        const double escale = std::abs(p.mu) + 2.0 * std::abs(p.t1) + 2.0 * std::abs(p.t2);
        for (const auto& mode : spectrum(p)) {
            ++modes_seen;
            if (!mode.degenerate) w_quant = std::max(w_quant, mode.quant_residual);
            if (mode.s_q * mode.lambda_i != -1) ++parity_violations;
            w_energy = std::max({w_energy, std::abs(dispersion(mode.k1, p) - mode.e) / escale, std::abs(dispersion(mode.k2, p) - mode.e) / escale});
            if (mode.degenerate) continue;
            auto v = eigenvector_tetranacci(mode.e, p);
            double nrm = 0.0;
            for (double x : v) nrm += x * x;
            nrm = std::sqrt(nrm);
            double dp = 0.0, dm = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                dp = std::max(dp, std::abs(v[i] / nrm - mode.vector[i]));
                dm = std::max(dm, std::abs(v[i] / nrm + mode.vector[i]));
            }
            w_vec = std::max(w_vec, std::min(dp, dm));
        }
    }
    r.bound("quantization_residual", w_quant, 1e-6);
    r.bound("equal_energy_constraint", w_energy, 1e-8);
    r.bound("eigenvector_closed_form", w_vec, 1e-7);
    r.check("parity_branch_product", parity_violations == 0,
            std::to_string(parity_violations) + " of " + std::to_string(modes_seen) + " modes violate s_q * lambda = -1");

    double w_kit = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
        KitaevParams kp{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.integer(2, 12)};
        auto bdg = sym_eigen(kitaev_bdg_matrix(kp)).values;
        std::vector<double> sq;
        for (double e : bdg) sq.push_back(e * e);
        std::sort(sq.begin(), sq.end());
        const auto h = kitaev_spectrum(kp).h_eigenvalues;
        for (std::size_t k = 0; k < h.size(); ++k) w_kit = std::max(w_kit, std::abs(sq[2 * k] - h[k]));
    }
    r.bound("kitaev_h_vs_bdg", w_kit, 1e-8);
}

void suite_transport(VerifyReport& rep, Rng& rng) {
    Recorder r(rep, "transport");
    double w_g = 0.0, w_bc = 0.0, w_trace = 0.0, t_max = 0.0, t_min = 0.0;
    for (int draw = 0; draw < 8; ++draw) {
        TransportSetup s;
        s.chain = {rng.uniform(-1.0, 1.0), rng.uniform(-3.0, 3.0), (draw % 2 ? -1.0 : 1.0) * rng.uniform(0.3, 1.5), rng.integer(3, 30), 1.0};
        s.left = {rng.uniform(0.1, 1.0), rng.uniform(-0.5, 0.5)};
        s.right = {rng.uniform(0.1, 1.0), rng.uniform(-0.5, 0.5)};
        const auto ev = sym_eigen(build_chain_matrix(s.chain)).values;
        for (int k = 0; k < 25; ++k) {
            const double e = ev.front() - 1.0 + (ev.back() - ev.front() + 2.0) * k / 24.0;
            const cplx gt = green_1n_tetranacci(e, s);
            const cplx gd = green_1n_dense(e, s);
            w_g = std::max(w_g, std::abs(gt - gd) / std::abs(gd));
            const auto sol = solve_boundary(e, s);
            const long n = s.chain.n;
            const double sc = std::max(std::abs(sol.g_m2 * sol.a), 1.0);
            const cplx rhs = sol.rho * sol.sigma(n) - s.chain.t2 * sol.sigma(n + 2);
            w_bc = std::max({w_bc, std::abs(sol.sigma(0)), std::abs(sol.sigma(n + 1)) / sc,
                             std::abs((cplx(0.0, 1.0) * s.left.gamma - s.left.lambda) * sol.sigma(1) - s.chain.t2 * sol.sigma(-1)),
                             std::abs(rhs - 1.0) / sc});
            const double t = transmission(e, s);
            t_max = std::max(t_max, t);
            t_min = std::min(t_min, t);
            if (k % 5 == 0) w_trace = std::max(w_trace, std::abs(transmission_dense_trace(e, s) - t));
        }
    }
    r.bound("green_1n_vs_dense", w_g, 1e-8);
    r.bound("boundary_equations", w_bc, 1e-9);
    r.bound("trace_formula", w_trace, 1e-9);
    r.check("transmission_in_unit_interval", t_min >= 0.0 && t_max <= 1.0 + 1e-9, "range [" + format_double(t_min) + ", " + format_double(t_max) + "]");

    TransportSetup s;
    s.chain = {0.3, 1.0, 0.8, 8, 1.0};
    s.left = {0.5, 0.0};
    s.right = {0.5, 0.0};
    const double h = 1e-6 * 4.0 * (std::abs(s.chain.t1) + std::abs(s.chain.t2));
    const double fd = (current(h, kZeroTemperature, s, 1e-10) - current(-h, kZeroTemperature, s, 1e-10)) / (2.0 * h);
    const double g = conductance(s);
    r.bound("conductance_vs_finite_difference", std::abs(fd - g) / std::max(g, 1e-300), 1e-4);
}

}  // namespace

VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const Implementation& impl) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw std::invalid_argument("unknown verify suite '" + suite + "'");
    VerifyReport rep;
    Rng rng(seed);
    const bool all = suite == "all";
    if (all || suite == "lemmata") suite_lemmata(rep);
    if (all || suite == "closed-form") suite_closed_form(rep, rng, impl);
    if (all || suite == "oracle") suite_oracle(rep, rng);
    if (all || suite == "transport") suite_transport(rep, rng);
    return rep;
}

}  // namespace tetra
