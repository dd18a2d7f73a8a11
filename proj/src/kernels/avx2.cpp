#include "ajcable/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace ajcable::kernels::avx2 {

// _mm256_mul_epi32 multiplies the low signed 32 bits of each 64-bit lane,
// which is exact under the int32 operand contract.
__attribute__((target("avx2"))) void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n,
                                               std::int64_t c) {
    const __m256i vc = _mm256_set1_epi64x(c);
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
        __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j + 4));
        __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
        __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j + 4));
        d0 = _mm256_add_epi64(d0, _mm256_mul_epi32(s0, vc));
        d1 = _mm256_add_epi64(d1, _mm256_mul_epi32(s1, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), d0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j + 4), d1);
    }
    for (; j < n; ++j) dst[j] += c * src[j];
}

// Shoup multiplication: with w = floor(c * 2^32 / p), the estimate
// q = floor(src * w / 2^32) leaves src*c - q*p in [0, 2p), computed mod 2^32.
__attribute__((target("avx2"))) void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                                               std::uint32_t c, std::uint32_t p) {
    const std::uint32_t w = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
        const __m256i lo = _mm256_srli_epi64(_mm256_mul_epu32(s, vw), 32);
        const __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), vw);
        const __m256i q = _mm256_blend_epi32(lo, hi, 0xAA);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(s, vc), _mm256_mullo_epi32(q, vp));
        r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
        __m256i d = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j)), r);
        d = _mm256_min_epu32(d, _mm256_sub_epi32(d, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), d);
    }
    scalar::axpy_mod(dst + j, src + j, n - j, c, p);
}

}  // namespace ajcable::kernels::avx2

#else

namespace ajcable::kernels::avx2 {

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c) {
    scalar::axpy_i64(dst, src, n, c);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    scalar::axpy_mod(dst, src, n, c, p);
}

}  // namespace ajcable::kernels::avx2

#endif
