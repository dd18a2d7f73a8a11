#include "printers.hpp"

#include "ajcable/degrees.hpp"
#include "ajcable/errors.hpp"

#include <algorithm>

using namespace ajcable;

namespace {

// Extremes of the cabling sum from the torus predictions, independent of the cable formulas.
DegreeBounds cable_bounds_from_torus(const CablingParams& c, std::int64_t n) {
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (std::int64_t twok = -(n - 1); twok <= n - 1; twok += 2) {
        const std::int64_t j = twok * c.s + 1;
        const std::int64_t e = -c.r * c.s * (n * n - 1) + c.r * c.s * twok * twok + 2 * c.r * twok;
        const auto pr = predicted_torus_degrees(c.p, c.q, j < 0 ? -j : j);
        lo = std::min(lo, *pr.lowest + e);
        hi = std::max(hi, *pr.highest + e);
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("torus predictions") {
    auto a = predicted_torus_degrees(3, 2, 2);
    CHECK(*a.lowest == -18);
    CHECK(*a.highest == -2);
    auto b = predicted_torus_degrees(3, 2, 3);
    CHECK(*b.lowest == -48);
    CHECK(*b.highest == -4);
    auto c = predicted_torus_degrees(-5, 3, 3);
    CHECK(*c.lowest == 28);
    CHECK(*c.highest == 120);
    CHECK(degree_bounds(torus_jones(-5, 3, 3)) == DegreeBounds{28, 120});
    CHECK_THROWS_AS(predicted_torus_degrees(3, 2, 0), BadParams);
    CHECK_THROWS_AS(predicted_torus_degrees(2, 3, 2), BadParams);
}

TEST_CASE("cable predictions") {
    auto a = predicted_cable_degrees({3, 2, 13, 2}, 2);
    CHECK(*a.lowest == -78);
    CHECK_FALSE(a.highest.has_value());
    auto b = predicted_cable_degrees({3, 2, -1, 2}, 2);
    CHECK(*b.lowest == -46);
    CHECK(*b.highest == 6);
    auto c = predicted_cable_degrees({-5, 3, 1, 2}, 3);
    CHECK(*c.lowest == -16);
    CHECK(c.highest.has_value());
    CHECK(degree_bounds(cabled_jones({-5, 3, 1, 2}, 3)).lowest == -16);
}

TEST_CASE("torus audit over n up to 20") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {5, 3}, {7, 3}, {-3, 2}, {-5, 3}}) {
        const DegreeAudit a = audit_torus_degrees(p, q, 20);
        CHECK_MESSAGE(a.pass, p, ",", q);
        CHECK(a.rows.size() == 38);
        CHECK(a.unchecked_sides == 0);
    }
}

TEST_CASE("cable audit") {
    for (const CablingParams c : {CablingParams{3, 2, 13, 2}, CablingParams{5, 3, 76, 5}, CablingParams{-5, 3, -7, 3},
                                  CablingParams{3, 2, -7, 4}, CablingParams{-3, 2, 1, 3}, CablingParams{-3, 2, -19, 2},
                                  CablingParams{5, 2, -1, 5}, CablingParams{-5, 3, 61, 4}}) {
        const DegreeAudit a = audit_degrees(c, 10);
        CHECK_MESSAGE(a.pass, c.to_string());
        for (const auto& row : a.rows)
            CHECK_MESSAGE(row.match, c.to_string(), " ", row.knot, " n=", row.n, " ", row.side, " predicted ",
                          row.predicted, " actual ", row.actual);
    }
}

TEST_CASE("cable predictions agree with extremes of the cabling sum") {
    // Valid where no cancellation happens at the extreme index, which the actual polynomial confirms.
    for (const CablingParams c : {CablingParams{3, 2, 13, 2}, CablingParams{3, 2, -1, 3}, CablingParams{-5, 3, 7, 4}}) {
        for (std::int64_t n = 2; n <= 8; ++n) {
            const auto pr = predicted_cable_degrees(c, n);
            const DegreeBounds sum = cable_bounds_from_torus(c, n);
            if (pr.lowest) CHECK(*pr.lowest == sum.lowest);
            if (pr.highest) CHECK(*pr.highest == sum.highest);
        }
    }
}

TEST_CASE("audit reports absent sides") {
    const DegreeAudit a = audit_degrees({3, 2, 13, 2}, 4);
    CHECK(a.unchecked_sides == 3);
    CHECK_THROWS_AS(audit_degrees({3, 2, 13, 2}, 1), BadParams);
}
