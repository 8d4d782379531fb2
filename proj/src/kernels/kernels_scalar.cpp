// Scalar reference kernels. Compiled with -ffp-contract=off so every float
// expression is literal IEEE; the AVX2 lane matches quantize/dequantize
// bit-for-bit against these.
#include <cmath>

#include "llmgpr/kernels.hpp"

namespace llmgpr::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void vadd_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void softmax_scalar(double* x, std::size_t n) {
    if (n == 0) return;
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i)
        if (x[i] > m) m = x[i];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::exp(x[i] - m);
        s += x[i];
    }
    const double inv = 1.0 / s;
    for (std::size_t i = 0; i < n; ++i) x[i] *= inv;
}

// round half away from zero, exact for t >= 0 (floor and the fractional
// subtraction are both exact IEEE operations)
inline double round_half_up(double t) {
    const double f = std::floor(t);
    return (t - f >= 0.5) ? f + 1.0 : f;
}

void quantize_scalar(const double* w, std::uint8_t* q, std::size_t n, double wmin,
                     double range, int levels) {
    const double dlevels = static_cast<double>(levels);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (w[i] - wmin) * dlevels / range;
        double r = round_half_up(t);
        if (r < 0.0) r = 0.0;
        if (r > dlevels) r = dlevels;
        q[i] = static_cast<std::uint8_t>(r);
    }
}

void dequantize_scalar(const std::uint8_t* q, double* w, std::size_t n, double wmin,
                       double delta) {
    for (std::size_t i = 0; i < n; ++i)
        w[i] = static_cast<double>(q[i]) * delta + wmin;
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",        dot_scalar,      axpy_scalar,       scale_scalar,
        vadd_scalar,     softmax_scalar,  quantize_scalar,   dequantize_scalar};
    return backend;
}

}  // namespace llmgpr::kernels
