#include "cgrig/matrix.hpp"

#include "cgrig/errors.hpp"
#include "cgrig/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace cgrig {

std::size_t rank(MatrixFp m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        }
        const Fp inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            const Fp factor = m(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

Fp determinant(MatrixFp m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Fp det = Fp::from_int(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return Fp{};
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        const Fp inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Fp factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

double determinant(MatrixD m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (std::abs(m(i, c)) > std::abs(m(pivot, c))) pivot = i;
        }
        if (m(pivot, c) == 0.0) return 0.0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const double factor = m(i, c) / m(c, c);
            if (factor == 0.0) continue;
            simd::axpy(-factor, &m(c, c), &m(i, c), n - c);
        }
    }
    return det;
}

FloatKernel kernel_float(const MatrixD& m, double tolerance) {
    if (!(tolerance > 0.0)) throw DomainError("rank tolerance must be positive");
    const std::size_t rows = m.rows();
    const std::size_t n = m.cols();
    // Work on copies of the rows: they are the columns of the transpose.
    std::vector<std::vector<double>> w(rows);
    for (std::size_t i = 0; i < rows; ++i) w[i].assign(m.row(i).begin(), m.row(i).end());

    std::vector<std::vector<double>> reflectors;
    std::vector<double> betas;
    double first = 0.0;
    std::size_t r = 0;
    const std::size_t steps = std::min(rows, n);
    for (; r < steps; ++r) {
        std::size_t best = r;
        double best_norm = -1.0;
        for (std::size_t j = r; j < rows; ++j) {
            const double s = simd::dot(w[j].data() + r, w[j].data() + r, n - r);
            if (s > best_norm) {
                best_norm = s;
                best = j;
            }
        }
        std::swap(w[r], w[best]);
        const double norm = std::sqrt(best_norm);
        if (r == 0) first = norm;
        if (norm == 0.0 || norm <= tolerance * first) break;

        std::vector<double> v(w[r].begin() + static_cast<std::ptrdiff_t>(r), w[r].end());
        const double alpha = v[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        const double beta = simd::dot(v.data(), v.data(), v.size());
        if (beta > 0.0) {
            for (std::size_t j = r + 1; j < rows; ++j) {
                double* tail = w[j].data() + r;
                const double s = simd::dot(v.data(), tail, v.size());
                simd::axpy(-2.0 * s / beta, v.data(), tail, v.size());
            }
        }
        reflectors.push_back(std::move(v));
        betas.push_back(beta);
    }

    FloatKernel out;
    out.rank = r;
    for (std::size_t t = r; t < n; ++t) {
        std::vector<double> x(n, 0.0);
        x[t] = 1.0;
        for (std::size_t k = r; k-- > 0;) {
            if (betas[k] == 0.0) continue;
            double* tail = x.data() + k;
            const auto& v = reflectors[k];
            const double s = simd::dot(v.data(), tail, v.size());
            simd::axpy(-2.0 * s / betas[k], v.data(), tail, v.size());
        }
        out.basis.push_back(std::move(x));
    }
    return out;
}

std::size_t rank_float(const MatrixD& m, double tolerance) { return kernel_float(m, tolerance).rank; }

MatrixD to_double(const MatrixFp& m) {
    MatrixD out(m.rows(), m.cols());
    constexpr std::uint64_t half = Fp::modulus / 2;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::uint64_t v = m(i, j).value();
            out(i, j) = v > half ? -static_cast<double>(Fp::modulus - v) : static_cast<double>(v);
        }
    }
    return out;
}

} // namespace cgrig
