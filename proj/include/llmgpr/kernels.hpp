#pragma once

#include <cstddef>
#include <cstdint>

// Dense inner-loop kernels behind the model, quantizer and scorers. Every
// kernel has a scalar reference implementation; on x86-64 an AVX2+FMA variant
// is selected at runtime when the CPU supports it. The environment variable
// LLMGPR_KERNELS=scalar|avx2 pins a backend.
//
// quantize/dequantize are bit-identical between backends; the reductions
// (dot, softmax) may differ by accumulation order within normal fp tolerance.
namespace llmgpr::kernels {

struct Backend {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x *= a
    void (*scale)(double a, double* x, std::size_t n);
    // y += x
    void (*vadd)(const double* x, double* y, std::size_t n);
    // in place, numerically stabilized
    void (*softmax)(double* x, std::size_t n);
    // q = round_half_away((w - wmin) * levels / range), clamped to [0, levels]
    void (*quantize)(const double* w, std::uint8_t* q, std::size_t n,
                     double wmin, double range, int levels);
    // w = q * delta + wmin
    void (*dequantize)(const std::uint8_t* q, double* w, std::size_t n,
                       double wmin, double delta);
};

const Backend& scalar_backend();
bool avx2_available();
const Backend& avx2_backend();  // falls back to scalar off x86-64

const Backend& active();
void force_backend(const char* name);  // "scalar" | "avx2" | "auto"

inline double dot(const double* a, const double* b, std::size_t n) {
    return active().dot(a, b, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }
inline void vadd(const double* x, double* y, std::size_t n) { active().vadd(x, y, n); }
inline void softmax(double* x, std::size_t n) { active().softmax(x, n); }
inline void quantize(const double* w, std::uint8_t* q, std::size_t n, double wmin,
                     double range, int levels) {
    active().quantize(w, q, n, wmin, range, levels);
}
inline void dequantize(const std::uint8_t* q, double* w, std::size_t n, double wmin,
                       double delta) {
    active().dequantize(q, w, n, wmin, delta);
}

// Row-major accumulating matrix products built on axpy/dot.
// C (m x n) += A (m x k) * B (k x n)
void gemm_nn(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n);
// C (m x n) += A^T * B, A stored as (k x m)
void gemm_tn(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n);
// C (m x n) += A * B^T, B stored as (n x k)
void gemm_nt(const double* A, const double* B, double* C, std::size_t m,
             std::size_t k, std::size_t n);

}  // namespace llmgpr::kernels
