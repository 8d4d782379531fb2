// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers reach it only through the dispatch table after the
// runtime CPU check. Remainder loops mirror the scalar reference exactly
// (-ffp-contract=off here as well).
#include "llmgpr/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace llmgpr::kernels {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4),
                               acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i + 4),
                                                    _mm256_loadu_pd(y + i + 4)));
    }
    if (i + 4 <= n) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
        i += 4;
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

void vadd_avx2(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i,
                         _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void softmax_avx2(double* x, std::size_t n) {
    if (n == 0) return;
    double m = x[0];
    std::size_t i = 1;
    if (n >= 5) {
        __m256d mv = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) mv = _mm256_max_pd(mv, _mm256_loadu_pd(x + i));
        double lanes[4];
        _mm256_storeu_pd(lanes, mv);
        m = lanes[0];
        for (int l = 1; l < 4; ++l)
            if (lanes[l] > m) m = lanes[l];
    }
    for (; i < n; ++i)
        if (x[i] > m) m = x[i];
    // exp stays scalar; there is no vector exp without an external math lib
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = std::exp(x[j] - m);
        s += x[j];
    }
    scale_avx2(1.0 / s, x, n);
}

void quantize_avx2(const double* w, std::uint8_t* q, std::size_t n, double wmin,
                   double range, int levels) {
    const double dlevels = static_cast<double>(levels);
    const __m256d wminv = _mm256_set1_pd(wmin);
    const __m256d levelsv = _mm256_set1_pd(dlevels);
    const __m256d rangev = _mm256_set1_pd(range);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_div_pd(
            _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(w + i), wminv), levelsv),
            rangev);
        const __m256d f = _mm256_floor_pd(t);
        const __m256d frac = _mm256_sub_pd(t, f);
        const __m256d bump = _mm256_and_pd(_mm256_cmp_pd(frac, half, _CMP_GE_OQ), one);
        __m256d r = _mm256_add_pd(f, bump);
        r = _mm256_max_pd(r, zero);
        r = _mm256_min_pd(r, levelsv);
        const __m128i as_i32 = _mm256_cvttpd_epi32(r);
        alignas(16) std::int32_t tmp[4];
        _mm_store_si128(reinterpret_cast<__m128i*>(tmp), as_i32);
        q[i] = static_cast<std::uint8_t>(tmp[0]);
        q[i + 1] = static_cast<std::uint8_t>(tmp[1]);
        q[i + 2] = static_cast<std::uint8_t>(tmp[2]);
        q[i + 3] = static_cast<std::uint8_t>(tmp[3]);
    }
    for (; i < n; ++i) {
        const double t = (w[i] - wmin) * dlevels / range;
        const double f = std::floor(t);
        double r = (t - f >= 0.5) ? f + 1.0 : f;
        if (r < 0.0) r = 0.0;
        if (r > dlevels) r = dlevels;
        q[i] = static_cast<std::uint8_t>(r);
    }
}

void dequantize_avx2(const std::uint8_t* q, double* w, std::size_t n, double wmin,
                     double delta) {
    const __m256d deltav = _mm256_set1_pd(delta);
    const __m256d wminv = _mm256_set1_pd(wmin);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::int32_t b0 = q[i], b1 = q[i + 1], b2 = q[i + 2], b3 = q[i + 3];
        const __m128i as_i32 = _mm_set_epi32(b3, b2, b1, b0);
        const __m256d qv = _mm256_cvtepi32_pd(as_i32);
        // mul then add (no FMA) to stay bit-identical with the scalar lane
        _mm256_storeu_pd(w + i, _mm256_add_pd(_mm256_mul_pd(qv, deltav), wminv));
    }
    for (; i < n; ++i) w[i] = static_cast<double>(q[i]) * delta + wmin;
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend backend{"avx2",       dot_avx2,      axpy_avx2,
                                 scale_avx2,   vadd_avx2,     softmax_avx2,
                                 quantize_avx2, dequantize_avx2};
    return backend;
}

}  // namespace llmgpr::kernels

#else

namespace llmgpr::kernels {
const Backend& avx2_backend() { return scalar_backend(); }
}  // namespace llmgpr::kernels

#endif
