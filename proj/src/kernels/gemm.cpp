#include "llmgpr/kernels.hpp"

namespace llmgpr::kernels {

void gemm_nn(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n) {
    const Backend& be = active();
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const double a = arow[l];
            if (a != 0.0) be.axpy(a, B + l * n, crow, n);
        }
    }
}

void gemm_tn(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n) {
    const Backend& be = active();
    for (std::size_t l = 0; l < k; ++l) {
        const double* arow = A + l * m;
        const double* brow = B + l * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = arow[i];
            if (a != 0.0) be.axpy(a, brow, C + i * n, n);
        }
    }
}

void gemm_nt(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n) {
    const Backend& be = active();
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] += be.dot(arow, B + j * k, k);
    }
}

}  // namespace llmgpr::kernels
