#pragma once

// Hot loops with a scalar reference and SIMD variants chosen at runtime.
//
//   axpy_i64: dst[j] += c * src[j]; c and every src[j] must fit in int32,
//             the caller guarantees the int64 sums cannot overflow.
//   axpy_mod: dst[j] = (dst[j] + c * src[j]) mod p, for p < 2^31 and all
//             operands already reduced.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ajcable::kernels {

enum class Isa { scalar, avx2, neon };

// Best variant the running CPU supports; AJCABLE_ISA=scalar forces the reference.
Isa detected_isa();
Isa active_isa();
// Returns false if the CPU cannot run the requested variant.
bool set_active_isa(Isa isa);
bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

namespace neon {
void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace neon

}  // namespace ajcable::kernels
