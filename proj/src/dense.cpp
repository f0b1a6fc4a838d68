#include "tetra/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tetra/errors.hpp"
#include "tetra/kernels.hpp"

namespace tetra {

std::vector<double> SymEigen::vector(std::size_t k) const {
    std::vector<double> v(vectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
    return v;
}

double norm_inf(const RealMatrix& m) noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

double norm_inf(const ComplexMatrix& m) noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

double norm_fro(const RealMatrix& m) noexcept {
    const auto& d = m.data();
    return std::sqrt(kernels::dot(d.data(), d.data(), d.size()));
}

namespace {

double off_diagonal_norm(const RealMatrix& a) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

}  // namespace

SymEigen sym_eigen(const RealMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n) throw PreconditionError("sym_eigen: matrix must be square and non-empty");

    const double scale = norm_inf(m);
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(m(i, j) - m(j, i));
        asym = std::max(asym, s);
    }
    if (asym >= 1e-12 * scale && asym > 0.0) {
        throw AsymmetryError("sym_eigen: ||m - m^T||_inf = " + std::to_string(asym) + " exceeds 1e-12 ||m||_inf");
    }

    RealMatrix a = m;
    // Symmetrise exactly so that mirroring rows into columns is consistent.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));

    // Rows of vt are the eigenvectors, so rotations stay contiguous.
    RealMatrix vt = RealMatrix::identity(n);
    const double target = 1e-14 * std::max(norm_fro(a), 1e-300);

    int sweep = 0;
    constexpr int kMaxSweeps = 100;
    while (off_diagonal_norm(a) >= target) {
        if (++sweep > kMaxSweeps) throw ConvergenceError("sym_eigen: Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                kernels::rotate(a.row(p), a.row(q), n, c, s);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    a(k, p) = a(p, k);
                    a(k, q) = a(q, k);
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;

                kernels::rotate(vt.row(p), vt.row(q), n, c, s);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymEigen out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt(order[k], i);
    }
    return out;
}

std::vector<std::complex<double>> solve_complex(ComplexMatrix a, std::vector<std::complex<double>> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw PreconditionError("solve_complex: dimension mismatch");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (!(best > 1e-300)) throw SingularMatrixError("solve_complex: pivot " + std::to_string(k) + " vanishes");
        if (piv != k) {
            std::swap_ranges(a.row(k), a.row(k) + n, a.row(piv));
            std::swap(b[k], b[piv]);
        }
        const auto inv = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto f = a(i, k) * inv;
            if (f == 0.0) continue;
            a(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<std::complex<double>> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        std::complex<double> s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

RealMatrix build_chain_matrix(const ChainParams& p) {
    if (p.n < 1) throw PreconditionError("build_chain_matrix: n must be >= 1");
    const auto n = static_cast<std::size_t>(p.n);
    RealMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = -p.mu;
        if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -p.t1;
        if (i + 2 < n) h(i, i + 2) = h(i + 2, i) = -p.t2;
    }
    return h;
}

bool orthonormalize(std::vector<std::vector<double>>& vs) {
    bool ok = true;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        auto& v = vs[k];
        const double before = std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
        // two passes of modified Gram-Schmidt
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < k; ++i) {
                const double proj = kernels::dot(vs[i].data(), v.data(), v.size());
                kernels::axpy(-proj, vs[i].data(), v.data(), v.size());
            }
        }
        const double nrm = std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
        if (!(nrm > 1e-12 * before) || nrm == 0.0) {
            ok = false;
            continue;
        }
        for (auto& x : v) x /= nrm;
    }
    return ok;
}

double max_principal_angle(std::vector<std::vector<double>> a, std::vector<std::vector<double>> b) {
    if (a.size() != b.size() || a.empty()) throw PreconditionError("max_principal_angle: subspaces must have equal, non-zero dimension");
    if (!orthonormalize(a) || !orthonormalize(b)) throw PreconditionError("max_principal_angle: rank-deficient basis");

    // sin(theta_max) is the largest singular value of (I - A A^T) B.
    const std::size_t k = b.size();
    std::vector<std::vector<double>> r = b;
    for (auto& col : r) {
        for (const auto& q : a) {
            const double proj = kernels::dot(q.data(), col.data(), col.size());
            kernels::axpy(-proj, q.data(), col.data(), col.size());
        }
    }
    RealMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = kernels::dot(r[i].data(), r[j].data(), r[i].size());
    const auto eig = sym_eigen(gram);
    const double s = std::sqrt(std::max(0.0, eig.values.back()));
    return std::asin(std::min(1.0, s));
}

}  // namespace tetra
