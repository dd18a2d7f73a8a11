#include "doctest.h"

#include "ajcable/kernels.hpp"

#include <random>
#include <vector>

using namespace ajcable::kernels;

namespace {

constexpr std::uint32_t kP = 2147483647u;

std::vector<Isa> available() {
    std::vector<Isa> out{Isa::scalar};
    for (Isa i : {Isa::avx2, Isa::neon})
        if (isa_supported(i)) out.push_back(i);
    return out;
}

void run_i64(Isa isa, std::int64_t* d, const std::int64_t* s, std::size_t n, std::int64_t c) {
    switch (isa) {
        case Isa::avx2: avx2::axpy_i64(d, s, n, c); break;
        case Isa::neon: neon::axpy_i64(d, s, n, c); break;
        default: scalar::axpy_i64(d, s, n, c);
    }
}

void run_mod(Isa isa, std::uint32_t* d, const std::uint32_t* s, std::size_t n, std::uint32_t c, std::uint32_t p) {
    switch (isa) {
        case Isa::avx2: avx2::axpy_mod(d, s, n, c, p); break;
        case Isa::neon: neon::axpy_mod(d, s, n, c, p); break;
        default: scalar::axpy_mod(d, s, n, c, p);
    }
}

}  // namespace

TEST_CASE("scalar axpy_i64 reference values") {
    std::vector<std::int64_t> d{1, 2, 3}, s{4, -5, 6};
    scalar::axpy_i64(d.data(), s.data(), 3, -2);
    CHECK(d == std::vector<std::int64_t>{-7, 12, -9});
}

TEST_CASE("scalar axpy_mod reference values") {
    std::vector<std::uint32_t> d{kP - 1, 0}, s{kP - 1, 3};
    scalar::axpy_mod(d.data(), s.data(), 2, kP - 1, kP);
    // (p-1) + (p-1)^2 = (p-1) + 1 = 0 mod p
    CHECK(d[0] == 0);
    CHECK(d[1] == static_cast<std::uint32_t>(3ull * (kP - 1) % kP));
}

TEST_CASE("SIMD axpy_i64 equals the scalar reference") {
    std::mt19937_64 rng(23);
    const std::int64_t lim = (std::int64_t{1} << 31) - 1;
    std::uniform_int_distribution<std::int64_t> small(-lim, lim);
    for (Isa isa : available()) {
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
            std::vector<std::int64_t> src(n), d0(n);
            for (auto& x : src) x = small(rng);
            for (auto& x : d0) x = small(rng) * 1024;
            for (std::int64_t c : {std::int64_t{0}, std::int64_t{1}, std::int64_t{-1}, lim, -lim, small(rng)}) {
                auto a = d0, b = d0;
                scalar::axpy_i64(a.data(), src.data(), n, c);
                run_i64(isa, b.data(), src.data(), n, c);
                CHECK_MESSAGE(a == b, isa_name(isa));
            }
        }
    }
}

TEST_CASE("SIMD axpy_mod equals the scalar reference") {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {kP, 1000000007u, 65537u, 3u}) {
        std::uniform_int_distribution<std::uint32_t> red(0, p - 1);
        for (Isa isa : available()) {
            for (std::size_t n : {0u, 1u, 7u, 8u, 15u, 16u, 100u, 513u}) {
                std::vector<std::uint32_t> src(n), d0(n);
                for (auto& x : src) x = red(rng);
                for (auto& x : d0) x = red(rng);
                for (std::uint32_t c : {0u, 1u, p - 1, red(rng)}) {
                    auto a = d0, b = d0;
                    scalar::axpy_mod(a.data(), src.data(), n, c, p);
                    run_mod(isa, b.data(), src.data(), n, c, p);
                    CHECK_MESSAGE(a == b, isa_name(isa));
                }
            }
        }
    }
}

TEST_CASE("dispatch selects a supported variant and can fall back to scalar") {
    const Isa before = active_isa();
    CHECK(isa_supported(before));
    CHECK(set_active_isa(Isa::scalar));
    CHECK(active_isa() == Isa::scalar);
    std::vector<std::int64_t> d{0, 0}, s{3, 4};
    axpy_i64(d.data(), s.data(), 2, 5);
    CHECK(d == std::vector<std::int64_t>{15, 20});
    CHECK(set_active_isa(before));
}
