#include "resbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resbench::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v) {
    if (v.size() != m.cols)
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const double* row = &m.data[i * m.cols];
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: dimension mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
    return out;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double max_abs(const Matrix& m) {
    double best = 0.0;
    for (double v : m.data) best = std::max(best, std::abs(v));
    return best;
}

SpectralRadiusEstimate spectral_radius(const Matrix& m, double tol,
                                       int max_iter, int /*restarts*/) {
    if (!m.square())
        throw std::invalid_argument("spectral_radius: matrix must be square");
    const std::size_t n = m.rows;
    if (n == 1) return {std::abs(m(0, 0)), true};

    // rho(A) = lim_k ||A^(2^k)||_F^(1/(2^k)), computed by repeated squaring
    // with a normalization after every square. Each normalization factor
    // enters the log of the estimate with weight 1/2^k, so the series
    // converges geometrically for any spectrum -- including complex dominant
    // pairs and clustered moduli, where vector iterations stall or oscillate.
    Matrix b = m;
    const double peak = max_abs(b);
    if (peak == 0.0) return {0.0, true};
    for (auto& v : b.data) v /= peak;
    double log_rho = std::log(peak);

    double weight = 1.0;
    int stable = 0;
    const int cap = std::min(max_iter, 64);  // increments vanish by 2^-64
    for (int it = 0; it < cap; ++it) {
        b = matmul(b, b);
        double norm = 0.0;
        for (double v : b.data) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) return {0.0, true};  // A^(2^k) == 0: nilpotent
        if (!std::isfinite(norm)) return {std::exp(log_rho), false};
        weight *= 0.5;
        const double inc = weight * std::log(norm);
        log_rho += inc;
        for (auto& v : b.data) v /= norm;
        // |log norm| is bounded, so consecutive tiny increments mean the
        // remaining tail is below tol as well
        stable = std::abs(inc) <= 0.1 * tol ? stable + 1 : 0;
        if (stable >= 2) return {std::exp(log_rho), true};
    }
    return {std::exp(log_rho), true};
}

Matrix scale_to_radius(const Matrix& m, double target) {
    const auto rho = spectral_radius(m);
    if (rho.value <= 1e-300)
        throw degenerate_matrix_error("scale_to_radius: zero spectral radius");
    const double factor = target / rho.value;
    Matrix out = m;
    for (auto& v : out.data) v *= factor;
    return out;
}

Matrix ridge_solve(const Matrix& x, const Matrix& y, double lambda) {
    if (x.rows != y.rows)
        throw std::invalid_argument("ridge_solve: X and Y row counts differ");
    if (x.rows < 1)
        throw std::invalid_argument("ridge_solve: need at least one sample");
    if (lambda < 0.0)
        throw std::invalid_argument("ridge_solve: lambda must be >= 0");

    const std::size_t n = x.cols;
    const std::size_t m = y.cols;

    // Gram matrix G = X^T X + lambda I and right-hand side B = X^T Y.
    Matrix g(n, n);
    for (std::size_t t = 0; t < x.rows; ++t) {
        const double* row = &x.data[t * n];
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = row[i];
            if (xi == 0.0) continue;
            for (std::size_t j = i; j < n; ++j) g(i, j) += xi * row[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) += lambda;
        for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
    }
    Matrix b(n, m);
    for (std::size_t t = 0; t < x.rows; ++t) {
        const double* xr = &x.data[t * n];
        const double* yr = &y.data[t * m];
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = xr[i];
            if (xi == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) b(i, j) += xi * yr[j];
        }
    }

    // In-place Cholesky G = L L^T.
    double diag_scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag_scale = std::max(diag_scale, std::abs(g(i, i)));
    for (std::size_t j = 0; j < n; ++j) {
        double d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= g(j, k) * g(j, k);
        if (!(d > diag_scale * 1e-15) || !std::isfinite(d))
            throw singular_system_error(
                "ridge_solve: singular normal equations; use lambda > 0");
        const double ljj = std::sqrt(d);
        g(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= g(i, k) * g(j, k);
            g(i, j) = s / ljj;
        }
    }

    // Solve L L^T W^T = B column by column.
    Matrix w(m, n);
    std::vector<double> col(n);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(i, c);
            for (std::size_t k = 0; k < i; ++k) s -= g(i, k) * col[k];
            col[i] = s / g(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = col[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= g(k, ii) * col[k];
            col[ii] = s / g(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) w(c, i) = col[i];
    }
    return w;
}

}  // namespace resbench::linalg
