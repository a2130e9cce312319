#include "qpc/kernels.hpp"

#include <atomic>

namespace qpc::kernels {

namespace detail {

void add_mod_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q) {
    for (size_t i = 0; i < len; ++i) {
        uint8_t s = uint8_t(a[i] + b[i]);
        dst[i] = s >= q ? uint8_t(s - q) : s;
    }
}

size_t count_diff_scalar(const uint8_t* a, const uint8_t* b, size_t len) {
    size_t d = 0;
    for (size_t i = 0; i < len; ++i) d += a[i] != b[i];
    return d;
}

size_t count_nonzero_scalar(const uint8_t* a, size_t len) {
    size_t w = 0;
    for (size_t i = 0; i < len; ++i) w += a[i] != 0;
    return w;
}

}  // namespace detail

namespace {

bool have_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<bool> g_force_scalar{false};

bool use_simd() { return !g_force_scalar.load(std::memory_order_relaxed) && have_avx2(); }

}  // namespace

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const char* active_backend() { return use_simd() ? "avx2" : "scalar"; }

void add_mod(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) {
        detail::add_mod_avx2(dst, a, b, len, q);
        return;
    }
#endif
    detail::add_mod_scalar(dst, a, b, len, q);
}

size_t count_diff(const uint8_t* a, const uint8_t* b, size_t len) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) return detail::count_diff_avx2(a, b, len);
#endif
    return detail::count_diff_scalar(a, b, len);
}

size_t count_nonzero(const uint8_t* a, size_t len) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_simd()) return detail::count_nonzero_avx2(a, len);
#endif
    return detail::count_nonzero_scalar(a, len);
}

}  // namespace qpc::kernels
