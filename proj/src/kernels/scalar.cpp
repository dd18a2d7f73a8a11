#include "ajcable/kernels.hpp"

namespace ajcable::kernels::scalar {

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c) {
    for (std::size_t j = 0; j < n; ++j) dst[j] += c * src[j];
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    const std::uint64_t cc = c;
    for (std::size_t j = 0; j < n; ++j)
        dst[j] = static_cast<std::uint32_t>((dst[j] + cc * src[j]) % p);
}

}  // namespace ajcable::kernels::scalar
