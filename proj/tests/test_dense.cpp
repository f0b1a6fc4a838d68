#include <doctest.h>

#include "support.hpp"
#include "tetra/dense.hpp"
#include "tetra/errors.hpp"

using namespace tetra;

TEST_CASE("Jacobi eigensolver on random symmetric matrices") {
    test::Rng rng(51);
    for (std::size_t n : {1u, 2u, 5u, 12u, 30u}) {
        RealMatrix a(n, n);
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-2.0, 2.0);
            trace += a(i, i);
        }
        const auto es = sym_eigen(a);
        REQUIRE(es.values.size() == n);
        CHECK(std::is_sorted(es.values.begin(), es.values.end()));
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            sum += es.values[k];
            CHECK(test::eigen_residual(a, es.vector(k), es.values[k]) < 1e-10);
            for (std::size_t l = 0; l < n; ++l) {
                double d = 0.0;
                const auto vk = es.vector(k), vl = es.vector(l);
                for (std::size_t i = 0; i < n; ++i) d += vk[i] * vl[i];
                CHECK(std::abs(d - (k == l ? 1.0 : 0.0)) < 1e-12);
            }
        }
        CHECK(std::abs(sum - trace) < 1e-11);
    }
}

TEST_CASE("nearest-neighbour chain spectrum") {
    ChainParams p;
    p.mu = 0.4;
    p.t1 = 1.3;
    p.t2 = 0.0;
    p.n = 17;
    const auto es = sym_eigen(build_chain_matrix(p));
    CHECK(test::max_abs_diff(es.values, test::tridiagonal_toeplitz_eigenvalues(17, -0.4, -1.3)) < 1e-12);
}

TEST_CASE("structural errors") {
    RealMatrix a(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS((void)sym_eigen(a), AsymmetryError);
    ComplexMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(0, 1) = 2.0;
    s(1, 0) = 2.0;
    s(1, 1) = 4.0;
    CHECK_THROWS_AS((void)solve_complex(s, {1.0, 1.0}), SingularMatrixError);
    ChainParams p;
    p.n = 0;
    CHECK_THROWS_AS((void)build_chain_matrix(p), PreconditionError);
}

TEST_CASE("complex solve") {
    test::Rng rng(52);
    const std::size_t n = 9;
    ComplexMatrix a(n, n);
    std::vector<std::complex<double>> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.complex(1.0);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex(1.0);
    }
    std::vector<std::complex<double>> b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x[j];
    const auto y = solve_complex(a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - x[i]) < 1e-10);
}

TEST_CASE("principal angles and orthonormalisation") {
    std::vector<std::vector<double>> a{{1, 0, 0}, {0, 1, 0}};
    std::vector<std::vector<double>> b{{1, 1, 0}, {1, -1, 0}};
    CHECK(orthonormalize(b));
    CHECK(max_principal_angle(a, b) < 1e-12);
    std::vector<std::vector<double>> c{{0, 0, 1}};
    CHECK(max_principal_angle({{1, 0, 0}}, c) == doctest::Approx(M_PI / 2));
    std::vector<std::vector<double>> dependent{{1, 2, 3}, {2, 4, 6}};
    CHECK_FALSE(orthonormalize(dependent));
}
