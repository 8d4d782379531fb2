#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "llmgpr/kernels.hpp"
#include "llmgpr/rng.hpp"

using namespace llmgpr;
namespace ker = llmgpr::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, Rng& rng, double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * rng.normal();
    return v;
}

const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 15, 16, 17, 63, 64, 257, 1000};

}  // namespace

TEST_CASE("scalar and avx2 lanes agree") {
    if (!ker::avx2_available()) return;
    const ker::Backend& sc = ker::scalar_backend();
    const ker::Backend& vx = ker::avx2_backend();
    Rng rng(99);

    for (std::size_t n : kSizes) {
        auto a = random_vec(n, rng);
        auto b = random_vec(n, rng);

        SUBCASE("") {}
        // dot: reduction order differs, allow relative slack
        {
            const double ds = sc.dot(a.data(), b.data(), n);
            const double dv = vx.dot(a.data(), b.data(), n);
            CHECK(std::fabs(ds - dv) <= 1e-10 * (1.0 + std::fabs(ds)));
        }
        // axpy: FMA vs mul+add, elementwise tolerance
        {
            auto ys = b, yv = b;
            sc.axpy(1.7, a.data(), ys.data(), n);
            vx.axpy(1.7, a.data(), yv.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::fabs(ys[i] - yv[i]) <= 1e-12 * (1.0 + std::fabs(ys[i])));
        }
        // scale / vadd: identical operations, bit-equal
        {
            auto xs = a, xv = a;
            sc.scale(0.37, xs.data(), n);
            vx.scale(0.37, xv.data(), n);
            CHECK(xs == xv);
            auto ys = b, yv = b;
            sc.vadd(a.data(), ys.data(), n);
            vx.vadd(a.data(), yv.data(), n);
            CHECK(ys == yv);
        }
        // softmax
        {
            auto xs = a, xv = a;
            sc.softmax(xs.data(), n);
            vx.softmax(xv.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::fabs(xs[i] - xv[i]) <= 1e-12);
        }
        // quantize / dequantize: bit-exact equivalence
        {
            double wmin = a[0], wmax = a[0];
            for (double v : a) {
                wmin = std::min(wmin, v);
                wmax = std::max(wmax, v);
            }
            const double range = (wmax > wmin) ? wmax - wmin : 1.0;
            const int levels = 15;
            std::vector<std::uint8_t> qs(n), qv(n);
            sc.quantize(a.data(), qs.data(), n, wmin, range, levels);
            vx.quantize(a.data(), qv.data(), n, wmin, range, levels);
            CHECK(qs == qv);
            std::vector<double> ws(n), wv(n);
            const double delta = range / levels;
            sc.dequantize(qs.data(), ws.data(), n, wmin, delta);
            vx.dequantize(qv.data(), wv.data(), n, wmin, delta);
            CHECK(ws == wv);
        }
    }
}

TEST_CASE("quantize kernel rounds half away from zero on exact halves") {
    // levels=2, range=2 -> t = w: 0.5 must go up to 1, 1.5 up to 2
    const double w[4] = {0.0, 0.5, 1.5, 2.0};
    std::uint8_t q[4];
    ker::scalar_backend().quantize(w, q, 4, 0.0, 2.0, 2);
    CHECK(q[0] == 0);
    CHECK(q[1] == 1);
    CHECK(q[2] == 2);
    CHECK(q[3] == 2);
    if (ker::avx2_available()) {
        std::uint8_t qv[4];
        ker::avx2_backend().quantize(w, qv, 4, 0.0, 2.0, 2);
        for (int i = 0; i < 4; ++i) CHECK(q[i] == qv[i]);
    }
}

TEST_CASE("softmax normalizes and is stable under large logits") {
    std::vector<double> x = {1000.0, 1001.0, 999.0};
    ker::softmax(x.data(), x.size());
    double s = x[0] + x[1] + x[2];
    CHECK(std::fabs(s - 1.0) <= 1e-12);
    CHECK(x[1] > x[0]);
    CHECK(x[0] > x[2]);
}

TEST_CASE("gemm variants match a naive triple loop") {
    Rng rng(7);
    const std::size_t m = 5, k = 7, n = 6;
    auto A = random_vec(m * k, rng);
    auto B = random_vec(k * n, rng);
    auto At = std::vector<double>(k * m);
    auto Bt = std::vector<double>(n * k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) At[l * m + i] = A[i * k + l];
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < n; ++j) Bt[j * k + l] = B[l * n + j];

    std::vector<double> ref(m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < n; ++j)
                ref[i * n + j] += A[i * k + l] * B[l * n + j];

    std::vector<double> c1(m * n, 0.0), c2(m * n, 0.0), c3(m * n, 0.0);
    ker::gemm_nn(A.data(), B.data(), c1.data(), m, k, n);
    ker::gemm_tn(At.data(), B.data(), c2.data(), m, k, n);
    ker::gemm_nt(A.data(), Bt.data(), c3.data(), m, k, n);
    for (std::size_t i = 0; i < m * n; ++i) {
        CHECK(std::fabs(c1[i] - ref[i]) <= 1e-12);
        CHECK(std::fabs(c2[i] - ref[i]) <= 1e-12);
        CHECK(std::fabs(c3[i] - ref[i]) <= 1e-12);
    }
}

TEST_CASE("backend can be forced and restored") {
    ker::force_backend("scalar");
    CHECK(std::string(ker::active().name) == "scalar");
    ker::force_backend("auto");
    if (ker::avx2_available()) CHECK(std::string(ker::active().name) == "avx2");
    CHECK_THROWS(ker::force_backend("never-heard-of-it"));
}
