#include "llmgpr/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "llmgpr/common.hpp"

namespace llmgpr {

void Matrix::zero() { std::fill(data.begin(), data.end(), 0.0); }

Matrix randn(std::size_t rows, std::size_t cols, double stddev, Rng& rng) {
    Matrix m(rows, cols);
    for (auto& v : m.data) v = stddev * rng.normal();
    return m;
}

std::uint64_t checksum(const Matrix& m) {
    std::uint64_t h = fnv1a(&m.rows, sizeof(m.rows));
    h = fnv1a(&m.cols, sizeof(m.cols), h);
    return fnv1a(m.data.data(), m.data.size() * sizeof(double), h);
}

std::uint64_t checksum(const std::vector<double>& v) {
    return fnv1a(v.data(), v.size() * sizeof(double));
}

bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return HUGE_VAL;
    return max_abs_diff(a.data, b.data);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return HUGE_VAL;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

std::size_t numerical_rank(Matrix m, double tol) {
    const std::size_t rows = m.rows, cols = m.cols;
    std::size_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = pivot_row;
        for (std::size_t r = pivot_row + 1; r < rows; ++r)
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(best, col))) best = r;
        if (std::fabs(m.at(best, col)) <= tol) continue;
        if (best != pivot_row)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m.at(best, c), m.at(pivot_row, c));
        const double inv = 1.0 / m.at(pivot_row, col);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const double f = m.at(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m.at(r, c) -= f * m.at(pivot_row, c);
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace llmgpr
