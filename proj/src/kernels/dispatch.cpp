#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "llmgpr/kernels.hpp"

namespace llmgpr::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Backend* pick_default() {
    if (const char* env = std::getenv("LLMGPR_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_backend();
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return &avx2_backend();
    }
    return avx2_available() ? &avx2_backend() : &scalar_backend();
}

const Backend*& slot() {
    static const Backend* backend = pick_default();
    return backend;
}

}  // namespace

const Backend& active() { return *slot(); }

void force_backend(const char* name) {
    if (std::strcmp(name, "auto") == 0) {
        slot() = pick_default();
        return;
    }
    if (std::strcmp(name, "scalar") == 0) {
        slot() = &scalar_backend();
        return;
    }
    if (std::strcmp(name, "avx2") == 0 && avx2_available()) {
        slot() = &avx2_backend();
        return;
    }
    throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

}  // namespace llmgpr::kernels
