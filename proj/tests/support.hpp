#pragma once
// Shared helpers for the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "tetra/dense.hpp"

namespace tetra::test {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    std::complex<double> complex(double radius) { return {uniform(-radius, radius), uniform(-radius, radius)}; }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double w = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) w = std::max(w, std::abs(a[i] - b[i]));
    return w;
}

// Eigenvalues of a nearest-neighbour chain of length m with on-site a and hopping b.
inline std::vector<double> tridiagonal_toeplitz_eigenvalues(int m, double a, double b) {
    std::vector<double> out;
    for (int k = 1; k <= m; ++k) out.push_back(a + 2.0 * b * std::cos(k * M_PI / (m + 1)));
    std::sort(out.begin(), out.end());
    return out;
}

// ||A v - lambda v||_inf for a real matrix.
inline double eigen_residual(const RealMatrix& a, const std::vector<double>& v, double lambda) {
    double w = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = -lambda * v[i];
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        w = std::max(w, std::abs(s));
    }
    return w;
}

}  // namespace tetra::test
