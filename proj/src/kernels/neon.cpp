#include "ajcable/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace ajcable::kernels::neon {

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c) {
    const int32x2_t vc = vdup_n_s32(static_cast<std::int32_t>(c));
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const int32x2_t s = vmovn_s64(vld1q_s64(src + j));
        vst1q_s64(dst + j, vmlal_s32(vld1q_s64(dst + j), s, vc));
    }
    for (; j < n; ++j) dst[j] += c * src[j];
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const std::uint32_t w = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const uint32x4_t vp = vdupq_n_u32(p);
    const uint32x4_t vc = vdupq_n_u32(c);
    const uint32x2_t vw = vdup_n_u32(w);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const uint32x4_t s = vld1q_u32(src + j);
        const uint64x2_t plo = vmull_u32(vget_low_u32(s), vw);
        const uint64x2_t phi = vmull_u32(vget_high_u32(s), vw);
        const uint32x4_t q = vcombine_u32(vshrn_n_u64(plo, 32), vshrn_n_u64(phi, 32));
        uint32x4_t r = vsubq_u32(vmulq_u32(s, vc), vmulq_u32(q, vp));
        r = vminq_u32(r, vsubq_u32(r, vp));
        uint32x4_t d = vaddq_u32(vld1q_u32(dst + j), r);
        d = vminq_u32(d, vsubq_u32(d, vp));
        vst1q_u32(dst + j, d);
    }
    scalar::axpy_mod(dst + j, src + j, n - j, c, p);
}

}  // namespace ajcable::kernels::neon

#else

namespace ajcable::kernels::neon {

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c) {
    scalar::axpy_i64(dst, src, n, c);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    scalar::axpy_mod(dst, src, n, c, p);
}

}  // namespace ajcable::kernels::neon

#endif
