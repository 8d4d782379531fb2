#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "llmgpr/rng.hpp"

namespace llmgpr {

// Dense row-major matrix of doubles. All model math funnels through the
// kernels module; this type only owns storage.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    void zero();
};

Matrix randn(std::size_t rows, std::size_t cols, double stddev, Rng& rng);

std::uint64_t checksum(const Matrix& m);
std::uint64_t checksum(const std::vector<double>& v);
bool all_finite(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

// Numerical rank via Gaussian elimination with partial pivoting.
std::size_t numerical_rank(Matrix m, double tol);

}  // namespace llmgpr
