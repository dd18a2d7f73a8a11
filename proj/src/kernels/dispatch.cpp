#include "ajcable/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ajcable::kernels {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#elif defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

Isa initial() {
    const char* env = std::getenv("AJCABLE_ISA");
    if (env != nullptr && std::string(env) == "scalar") return Isa::scalar;
    return probe();
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial()};
    return isa;
}

}  // namespace

Isa detected_isa() {
    static const Isa isa = probe();
    return isa;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_supported(Isa isa) {
    if (isa == Isa::scalar) return true;
    return isa == detected_isa();
}

bool set_active_isa(Isa isa) {
    if (!isa_supported(isa)) return false;
    current().store(isa, std::memory_order_relaxed);
    return true;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        default: return "scalar";
    }
}

void axpy_i64(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t c) {
    switch (active_isa()) {
        case Isa::avx2: return avx2::axpy_i64(dst, src, n, c);
        case Isa::neon: return neon::axpy_i64(dst, src, n, c);
        default: return scalar::axpy_i64(dst, src, n, c);
    }
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    switch (active_isa()) {
        case Isa::avx2: return avx2::axpy_mod(dst, src, n, c, p);
        case Isa::neon: return neon::axpy_mod(dst, src, n, c, p);
        default: return scalar::axpy_mod(dst, src, n, c, p);
    }
}

}  // namespace ajcable::kernels
