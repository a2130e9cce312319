// AVX2 variants of the byte kernels.  Compiled with -mavx2; only reached
// after the runtime CPUID check in kernels.cpp.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "qpc/kernels.hpp"

namespace qpc::kernels::detail {

void add_mod_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q) {
    const __m256i vq = _mm256_set1_epi8(char(q));
    const __m256i vqm1 = _mm256_set1_epi8(char(q - 1));
    size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_add_epi8(va, vb);
        // entries < q <= 32, so the sum stays below 64 and signed compare is safe
        __m256i over = _mm256_cmpgt_epi8(s, vqm1);
        s = _mm256_sub_epi8(s, _mm256_and_si256(over, vq));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    add_mod_scalar(dst + i, a + i, b + i, len - i, q);
}

size_t count_diff_avx2(const uint8_t* a, const uint8_t* b, size_t len) {
    size_t same = 0, i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i eq = _mm256_cmpeq_epi8(va, vb);
        same += size_t(__builtin_popcount(unsigned(_mm256_movemask_epi8(eq))));
    }
    return (i - same) + count_diff_scalar(a + i, b + i, len - i);
}

size_t count_nonzero_avx2(const uint8_t* a, size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    size_t zeros = 0, i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i eq = _mm256_cmpeq_epi8(va, zero);
        zeros += size_t(__builtin_popcount(unsigned(_mm256_movemask_epi8(eq))));
    }
    return (i - zeros) + count_nonzero_scalar(a + i, len - i);
}

}  // namespace qpc::kernels::detail

#endif
