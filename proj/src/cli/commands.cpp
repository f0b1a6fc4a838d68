#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "tetra/chain.hpp"
#include "tetra/cli.hpp"
#include "tetra/closed_form.hpp"
#include "tetra/dense.hpp"
#include "tetra/errors.hpp"
#include "tetra/kitaev.hpp"
#include "tetra/recurrence.hpp"
#include "tetra/table.hpp"
#include "tetra/transport.hpp"

namespace tetra::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Grid {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    [[nodiscard]] double at(int i) const { return steps == 1 ? min : min + (max - min) * i / (steps - 1); }
};

Grid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("grid must be min:max:steps, got '" + text + "'");
    Grid g;
    std::size_t used = 0;
    g.min = std::stod(parts[0], &used);
    g.max = std::stod(parts[1]);
    g.steps = std::stoi(parts[2]);
    if (g.steps < 1) throw std::invalid_argument("grid steps must be >= 1");
    if (g.min > g.max) throw std::invalid_argument("grid min must not exceed max");
    return g;
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_complex(item));
    return out;
}

double parse_beta(const std::string& text) {
    if (text == "inf" || text == "infinity") return kZeroTemperature;
    const double b = std::stod(text);
    if (!(b > 0.0)) throw std::invalid_argument("--beta must be positive or 'inf'");
    return b;
}

struct Common {
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "Output path (default stdout)");
    sub->add_option("--seed", c.seed, "Seed for randomized suites");
}

// Echo every option of the subcommand into the JSON meta block.
void echo_config(const CLI::App* sub, Table& t) {
    t.meta.insert(t.meta.begin(), {"artifact_version", std::string(kVersion)});
    t.meta.insert(t.meta.begin() + 1, {"command", sub->get_name()});
    for (const auto* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name.empty()) continue;
        std::string value;
        if (opt->count() > 0) {
            const auto& res = opt->results();
            for (std::size_t i = 0; i < res.size(); ++i) value += (i ? " " : "") + res[i];
        } else {
            value = opt->get_default_str();
        }
        t.meta.emplace_back(name, value);
    }
}

int emit(const Table& t, const Common& c, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            err << "error: cannot open output file '" << c.out << "'\n";
            return kUsage;
        }
        os = &file;
    }
    if (c.format == "json") {
        t.write_json(*os);
    } else {
        t.write_csv(*os);
    }
    return kOk;
}

std::string arrow_name(Arrow a) { return to_string(a); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Implementation& impl) {
    CLI::App app{"Symmetric Tetranacci polynomials, next-nearest-neighbour chains, Kitaev/XY mapping and transport"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    Common common;

    // seq
    std::string g_text = "0,0,0,1", zeta_text = "0", eta_text = "0", seq_mode = "both";
    long lo = -2, hi = 10;
    auto* seq = app.add_subcommand("seq", "Evaluate a sequence by recursion and/or closed form");
    seq->add_option("--g", g_text, "Initial values g-2,g-1,g0,g1 (complex, re+imj)");
    seq->add_option("--zeta", zeta_text, "zeta (complex)");
    seq->add_option("--eta", eta_text, "eta (complex)");
    seq->add_option("--lo", lo, "First index");
    seq->add_option("--hi", hi, "Last index");
    seq->add_option("--mode", seq_mode, "recursion|closed|both")->check(CLI::IsMember({"recursion", "closed", "both"}));
    add_common(seq, common);

    // chain parameters shared by spectrum and transport
    int n = 20;
    double mu = 0.0, t1 = 1.0, t2 = 1.0;
    std::vector<std::string> grids;

    auto* spec = app.add_subcommand("spectrum", "Chain spectrum with wavevectors, parity and arrow class");
    spec->add_option("--n", n, "Number of sites")->check(CLI::PositiveNumber);
    spec->add_option("--mu", mu, "Chemical potential");
    spec->add_option("--t1", t1, "Nearest-neighbour hopping");
    spec->add_option("--t2", t2, "Next-nearest-neighbour hopping");
    spec->add_option("--grid", grids, "Sweep eta = -t1/t2 over min:max:steps (t2 fixed)")->expected(0, 1);
    add_common(spec, common);

    auto* cross = app.add_subcommand("crossings", "Enumerate degenerate eigenvalue crossings");
    cross->add_option("--n", n, "Number of sites")->check(CLI::Range(2, 1 << 20));
    add_common(cross, common);

    auto* arrow = app.add_subcommand("arrow", "Classify a (eta, zeta) grid against the Tetranacci arrow");
    arrow->add_option("--grid", grids, "eta grid, then zeta grid (min:max:steps each)")->expected(0, 2);
    add_common(arrow, common);

    double t = 1.0, delta = 1.0, jx = 1.0, jy = 1.0, hfield = 0.0;
    bool xy = false;
    int kn = 10;
    auto* kit = app.add_subcommand("kitaev", "Kitaev chain spectrum through the effective matrix h, or XY-chain hoppings");
    kit->add_option("--n", kn, "Number of sites")->check(CLI::Range(2, 1 << 20));
    kit->add_option("--mu", mu, "Chemical potential");
    kit->add_option("--t", t, "Hopping");
    kit->add_option("--delta", delta, "p-wave pairing");
    kit->add_option("--grid", grids, "Sweep mu over min:max:steps")->expected(0, 1);
    kit->add_flag("--xy", xy, "Report XY-chain effective hoppings instead");
    kit->add_option("--jx", jx, "XY coupling Jx");
    kit->add_option("--jy", jy, "XY coupling Jy");
    kit->add_option("--hfield", hfield, "XY transverse field h");
    add_common(kit, common);

    double gamma_l = 0.5, gamma_r = 0.5, lambda_l = 0.0, lambda_r = 0.0;
    std::string beta_text = "inf", tr_mode = "transmission";
    int tn = 10;
    double tt2 = 0.5;
    auto* tr = app.add_subcommand("transport", "Transmission T(E) or current I(V) through the chain");
    tr->add_option("--n", tn, "Number of sites")->check(CLI::PositiveNumber);
    tr->add_option("--mu", mu, "Chemical potential");
    tr->add_option("--t1", t1, "Nearest-neighbour hopping");
    tr->add_option("--t2", tt2, "Next-nearest-neighbour hopping");
    tr->add_option("--gamma-l", gamma_l, "Left broadening")->check(CLI::NonNegativeNumber);
    tr->add_option("--gamma-r", gamma_r, "Right broadening")->check(CLI::NonNegativeNumber);
    tr->add_option("--lambda-l", lambda_l, "Left level shift");
    tr->add_option("--lambda-r", lambda_r, "Right level shift");
    tr->add_option("--beta", beta_text, "Inverse temperature or 'inf'");
    tr->add_option("--grid", grids, "Energy grid (transmission) or bias grid (current)")->expected(0, 1);
    tr->add_option("--mode", tr_mode, "transmission|current")->check(CLI::IsMember({"transmission", "current"}));
    add_common(tr, common);

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "Run self-verification suites");
    ver->add_option("--suite", suite, "lemmata|closed-form|oracle|transport|all")->check(CLI::IsMember(verify_suite_names()));
    add_common(ver, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Table table;
        CLI::App* used = nullptr;

        if (seq->parsed()) {
            used = seq;
            if (hi < lo) {
                err << "error: empty range (hi < lo)\n";
                return kUsage;
            }
            const auto gv = parse_complex_list(g_text);
            if (gv.size() != 4) throw std::invalid_argument("--g needs exactly four comma-separated values");
            InitialValues g;
            std::copy(gv.begin(), gv.end(), g.g.begin());
            const Coefficients c{parse_complex(zeta_text), parse_complex(eta_text)};
            const bool want_rec = seq_mode != "closed";
            const bool want_closed = seq_mode != "recursion";
            SequenceWindow rec;
            if (want_rec) rec = eval_range(g, c, lo, hi);
            const auto cd = characterize(c);
            table.columns = {"j"};
            if (want_rec) table.columns.emplace_back("recursion");
            if (want_closed) table.columns.emplace_back("closed");
            if (want_rec && want_closed) table.columns.emplace_back("abs_dev");
            double worst = 0.0;
            for (long j = lo; j <= hi; ++j) {
                std::vector<Cell> row{static_cast<std::int64_t>(j)};
                cplx r{}, cl{};
                if (want_rec) row.emplace_back(r = rec.at(j));
                if (want_closed) row.emplace_back(cl = xi_closed(g, j, cd));
                if (want_rec && want_closed) {
                    row.emplace_back(std::abs(r - cl));
                    worst = std::max(worst, std::abs(r - cl));
                }
                table.add_row(std::move(row));
            }
            table.meta.emplace_back("root_class", std::string(to_string(cd.cls)));
            echo_config(used, table);
            const int rc = emit(table, common, out, err);
            if (rc != kOk) return rc;
            if (want_rec && want_closed && worst > 1e-8 * std::max(1.0, rec.max_abs())) {
                err << "verification failed: closed form deviates from recursion by " << format_double(worst) << "\n";
                return kVerifyFailed;
            }
            return kOk;
        }

        if (spec->parsed()) {
            used = spec;
            if (grids.empty()) {
                const ChainParams p{mu, t1, t2, n, 1.0};
                table.columns = {"e", "k1", "k2", "k_plus", "k_minus", "s_q", "lambda_i", "arrow", "quant_residual", "degenerate", "vector"};
                for (const auto& m : spectrum(p)) {
                    table.add_row({m.e, m.k1, m.k2, m.k_plus, m.k_minus, static_cast<std::int64_t>(m.s_q),
                                   static_cast<std::int64_t>(m.lambda_i), arrow_name(m.arrow), m.quant_residual, m.degenerate, m.vector});
                }
            } else {
                if (t2 == 0.0) throw ZeroT2Error("spectrum sweep: --t2 must be non-zero");
                const Grid g = parse_grid(grids.front());
                table.columns = {"eta", "zeta", "e", "arrow"};
                for (int i = 0; i < g.steps; ++i) {
                    const double eta = g.at(i);
                    const ChainParams p{mu, -eta * t2, t2, n, 1.0};
                    for (const auto& m : spectrum(p)) {
                        table.add_row({eta, -(m.e + mu) / t2, m.e, arrow_name(m.arrow)});
                    }
                }
            }
        } else if (cross->parsed()) {
            used = cross;
            const auto recs = crossings(n);
            table.columns = {"n_idx", "l_idx", "k_plus", "k_minus", "eta", "zeta", "t1_over_t2", "e"};
            for (const auto& r : recs) {
                table.add_row({static_cast<std::int64_t>(r.n_idx), static_cast<std::int64_t>(r.l_idx), r.k_plus, r.k_minus, r.eta, r.zeta,
                               r.t1_over_t2, r.e});
            }
            table.meta.emplace_back("count", static_cast<std::int64_t>(recs.size()));
            table.trailer.push_back("count=" + std::to_string(recs.size()));
        } else if (arrow->parsed()) {
            used = arrow;
            const Grid ge = grids.size() > 0 ? parse_grid(grids[0]) : Grid{-6.0, 6.0, 61};
            const Grid gz = grids.size() > 1 ? parse_grid(grids[1]) : Grid{-12.0, 4.0, 81};
            table.columns = {"eta", "zeta", "class"};
            for (int i = 0; i < ge.steps; ++i)
                for (int k = 0; k < gz.steps; ++k) {
                    table.add_row({ge.at(i), gz.at(k), std::string(to_string(arrow_classify(gz.at(k), ge.at(i))))});
                }
        } else if (kit->parsed()) {
            used = kit;
            if (xy) {
                const auto [e1, e2] = xy_effective_hoppings({jx, jy, hfield});
                table.columns = {"jx", "jy", "hfield", "t1_eff", "t2_eff", "eta"};
                table.add_row({jx, jy, hfield, e1, e2, e2 != 0.0 ? -e1 / e2 : std::numeric_limits<double>::quiet_NaN()});
            } else {
                const Grid g = grids.empty() ? Grid{mu, mu, 1} : parse_grid(grids.front());
                table.columns = {"mu", "t1_eff", "t2_eff", "eta", "zeta", "e", "e_squared"};
                for (int i = 0; i < g.steps; ++i) {
                    const KitaevParams kp{g.at(i), t, delta, kn};
                    const auto sp = kitaev_spectrum(kp);
                    for (double lam : sp.h_eigenvalues) {
                        const double e = std::sqrt(std::max(lam, 0.0));
                        double eta = std::numeric_limits<double>::quiet_NaN(), zeta = eta;
                        const double t1e = 2.0 * t * kp.mu, t2e = t * t - delta * delta;
                        if (t2e != 0.0) {
                            const auto kc = kitaev_effective_coeffs(e, kp);
                            eta = kc.coeffs.eta.real();
                            zeta = kc.coeffs.zeta.real();
                        }
                        table.add_row({kp.mu, t1e, t2e, eta, zeta, e, lam});
                    }
                }
            }
        } else if (tr->parsed()) {
            used = tr;
            TransportSetup s;
            s.chain = {mu, t1, tt2, tn, 1.0};
            s.left = {gamma_l, lambda_l};
            s.right = {gamma_r, lambda_r};
            const double beta = parse_beta(beta_text);
            if (tr_mode == "transmission") {
                Grid g;
                if (grids.empty()) {
                    const auto ev = sym_eigen(build_chain_matrix(s.chain)).values;
                    g = {ev.front() - 1.0, ev.back() + 1.0, 201};
                } else {
                    g = parse_grid(grids.front());
                }
                table.columns = {"e", "transmission"};
                for (int i = 0; i < g.steps; ++i) table.add_row({g.at(i), transmission(g.at(i), s)});
            } else {
                const Grid g = grids.empty() ? Grid{-2.0, 2.0, 41} : parse_grid(grids.front());
                table.columns = {"v", "current"};
                for (int i = 0; i < g.steps; ++i) table.add_row({g.at(i), current(g.at(i), beta, s)});
            }
            table.meta.emplace_back("conductance", conductance(s));
        } else if (ver->parsed()) {
            const auto report = run_verify(suite, common.seed, impl);
            std::size_t failed = 0;
            for (const auto& c : report.checks) {
                out << (c.pass ? "PASS " : "FAIL ") << c.suite << "/" << c.name;
                if (!c.detail.empty()) out << "  " << c.detail;
                out << "\n";
                if (!c.pass) ++failed;
            }
            out << (failed == 0 ? "all " : "") << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
            return failed == 0 ? kOk : kVerifyFailed;
        }

        echo_config(used, table);
        return emit(table, common, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: value out of range: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace tetra::cli
