#pragma once
// Brute-force dense linear algebra used as ground truth by the tests and the
// verification suites: cyclic Jacobi for real symmetric matrices and
// partial-pivoting LU for complex systems.

#include <complex>
#include <cstddef>
#include <vector>

#include "tetra/chain_params.hpp"

namespace tetra {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    explicit Matrix(std::size_t n) : Matrix(n, n) {}

    [[nodiscard]] static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    T* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

    [[nodiscard]] std::vector<T>& data() noexcept { return data_; }
    [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

/// Eigenpairs with ascending eigenvalues; eigenvector k is column k of `vectors`.
struct SymEigen {
    std::vector<double> values;
    RealMatrix vectors;
    int sweeps = 0;

    [[nodiscard]] std::vector<double> vector(std::size_t k) const;
};

/// Max-row-sum norm.
[[nodiscard]] double norm_inf(const RealMatrix& m) noexcept;
[[nodiscard]] double norm_inf(const ComplexMatrix& m) noexcept;
[[nodiscard]] double norm_fro(const RealMatrix& m) noexcept;

/// Cyclic Jacobi. Throws AsymmetryError if ||m - m^T||_inf >= 1e-12 ||m||_inf.
[[nodiscard]] SymEigen sym_eigen(const RealMatrix& m);

/// Solves a x = b by LU with partial pivoting. Throws SingularMatrixError
/// when a pivot magnitude drops to 1e-300 or below.
[[nodiscard]] std::vector<std::complex<double>> solve_complex(ComplexMatrix a, std::vector<std::complex<double>> b);

/// Pentadiagonal Toeplitz chain matrix.
[[nodiscard]] RealMatrix build_chain_matrix(const ChainParams& p);

/// Largest principal angle (radians) between the column spans of a and b,
/// each given as a list of column vectors. Both sets are orthonormalised first.
[[nodiscard]] double max_principal_angle(std::vector<std::vector<double>> a, std::vector<std::vector<double>> b);

/// Modified Gram-Schmidt in place; returns false if a vector is numerically dependent.
bool orthonormalize(std::vector<std::vector<double>>& vs);

}  // namespace tetra
