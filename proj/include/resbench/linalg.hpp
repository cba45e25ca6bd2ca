#pragma once

#include <cstddef>
#include <vector>

#include "resbench/common.hpp"

namespace resbench::linalg {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n);

    bool square() const { return rows == cols && rows > 0; }
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double frobenius_distance(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& m);

struct SpectralRadiusEstimate {
    double value = 0.0;
    bool converged = false;
};

// Largest |eigenvalue|, via the norm limit rho = lim ||A^(2^k)||^(1/2^k)
// evaluated by repeated squaring with per-step normalization. Deterministic
// and robust for complex dominant pairs and clustered moduli, where vector
// iterations oscillate. `restarts` is accepted for interface stability but
// unused.
SpectralRadiusEstimate spectral_radius(const Matrix& m, double tol = 1e-10,
                                       int max_iter = 10000, int restarts = 3);

// M * (target / spectral_radius(M)). Throws degenerate_matrix_error when the
// spectral radius is (numerically) zero.
Matrix scale_to_radius(const Matrix& m, double target);

// Minimize ||X W^T - Y||^2 + lambda ||W||^2 over W (m x n), with X (T x n)
// and Y (T x m), via the normal equations and a Cholesky solve. A
// non-positive pivot with lambda == 0 raises singular_system_error.
Matrix ridge_solve(const Matrix& x, const Matrix& y, double lambda);

}  // namespace resbench::linalg
