#ifndef QPC_KERNELS_HPP
#define QPC_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Byte-wise inner-loop kernels over flat buffers of field elements.
// add_mod assumes a prime field: entries in [0, q) with q <= 32, so a + b
// fits in a byte and a single conditional subtract reduces it.  Extension
// fields take the generic table path in the callers instead.
//
// Each kernel has a scalar reference implementation and an AVX2 variant;
// the backend is picked once at startup from CPUID.  force_scalar() pins
// the reference path (used by the equivalence tests and the --no-simd flag).
namespace qpc::kernels {

// dst[i] = (a[i] + b[i]) mod q; dst may alias a or b.
void add_mod(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q);

// Number of positions where a and b differ (Hamming distance of buffers).
size_t count_diff(const uint8_t* a, const uint8_t* b, size_t len);

// Number of nonzero bytes (Hamming weight of a buffer).
size_t count_nonzero(const uint8_t* a, size_t len);

const char* active_backend();  // "avx2" or "scalar"
void force_scalar(bool on);

namespace detail {
void add_mod_scalar(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q);
size_t count_diff_scalar(const uint8_t* a, const uint8_t* b, size_t len);
size_t count_nonzero_scalar(const uint8_t* a, size_t len);
#if defined(__x86_64__) || defined(_M_X64)
void add_mod_avx2(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t len, uint8_t q);
size_t count_diff_avx2(const uint8_t* a, const uint8_t* b, size_t len);
size_t count_nonzero_avx2(const uint8_t* a, size_t len);
#endif
}  // namespace detail

}  // namespace qpc::kernels

#endif
