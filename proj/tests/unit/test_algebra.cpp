#include "printers.hpp"

#include "ajcable/accumulate.hpp"
#include "ajcable/errors.hpp"
#include "ajcable/format.hpp"
#include "ajcable/laurent.hpp"
#include "ajcable/rational.hpp"

#include <random>

using namespace ajcable;

namespace {

IntLaurent2 P2(const char* s) { return parse_laurent2(s); }
IntLaurent1 P1(const char* s) { return parse_laurent1(s); }
IntLaurent1 PM(const char* s) { return parse_laurent1(s, 'M'); }

IntLaurent2 random_poly2(std::mt19937_64& rng, int max_terms = 5, int span = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms), ex(-span, span), co(-5, 5);
    std::vector<IntLaurent2::Term> v;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) v.emplace_back(Mono{ex(rng), ex(rng)}, BigInt(co(rng)));
    return IntLaurent2::from_terms(std::move(v));
}

IntLaurent2 random_nonzero2(std::mt19937_64& rng) {
    for (;;) {
        auto f = random_poly2(rng);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(P2("t + t^-1"), P2("t - t^-1")) == P2("t^2 - t^-2"));
    CHECK(poly_mul(P2("M*t^2"), P2("M^-1")) == P2("t^2"));
    CHECK(poly_mul(P2("1 + M"), P2("1 - M")) == P2("1 - M^2"));
}

TEST_CASE("poly_exact_div examples") {
    CHECK(poly_exact_div(P2("t^2 - t^-2"), P2("t - t^-1")) == P2("t + t^-1"));
    CHECK(poly_exact_div(P2("t^12 + t^-8 - t^-4 - 1"), P2("t^2 - t^-2")) == P2("t^10 + t^6 + t^2 - t^-6"));
    CHECK_THROWS_AS(poly_exact_div(P2("t + 1"), P2("t - 1")), NotDivisible);
    CHECK_THROWS_AS(poly_exact_div(P2("t + 1"), IntLaurent2{}), DivByZero);
    CHECK(poly_exact_div(P1("t^12 + t^-8 - t^-4 - 1"), qint_den()) == P1("t^10 + t^6 + t^2 - t^-6"));
    CHECK_THROWS_AS(poly_exact_div(P1("t + 1"), P1("t - 1")), NotDivisible);
}

TEST_CASE("univariate long division oracle for the delta_0 numerator") {
    // Repeated subtraction of multiples of (t^2 - t^-2), written independently of the library division.
    std::map<std::int64_t, long> rem{{12, 1}, {-8, 1}, {-4, -1}, {0, -1}};
    std::map<std::int64_t, long> quot;
    while (!rem.empty()) {
        auto top = *rem.rbegin();
        quot[top.first - 2] += top.second;
        rem[top.first] -= top.second;
        rem[top.first - 4] += top.second;
        for (auto it = rem.begin(); it != rem.end();) it = it->second == 0 ? rem.erase(it) : std::next(it);
        REQUIRE(top.first > -20);
    }
    std::vector<IntLaurent1::Term> v;
    for (auto [e, c] : quot) v.emplace_back(e, BigInt(c));
    CHECK(IntLaurent1::from_terms(v) == poly_exact_div(P1("t^12 + t^-8 - t^-4 - 1"), qint_den()));
}

TEST_CASE("substitute_M and shift_M examples") {
    CHECK(substitute_M(P2("M^2*t^3"), 2) == P1("t^11"));
    CHECK(substitute_M(P2("M - M^-1"), 0).is_zero());
    CHECK(substitute_M(P2("M^10*t^22 + M^-10*t^-18 - M^-2*t^-6 - M^2*t^2"), 1) ==
          P1("t^42 + t^-38 - t^-10 - t^6"));
    CHECK(shift_M(P2("M"), 1) == P2("t^2*M"));
    CHECK(shift_M(P2("t^3"), 5) == P2("t^3"));
    CHECK(shift_M(P2("M^2 + M^-1"), 2) == P2("t^8*M^2 + t^-4*M^-1"));
}

TEST_CASE("term-by-term substitution oracle") {
    const IntLaurent2 f = P2("M^10*t^22 + M^-10*t^-18 - M^-2*t^-6 - M^2*t^2");
    for (int n = -3; n <= 3; ++n) {
        IntLaurent1 expect;
        for (const auto& [k, c] : f.terms()) expect += IntLaurent1::monomial(k.t + 2 * n * k.m, c);
        CHECK(substitute_M(f, n) == expect);
    }
}

TEST_CASE("limit_t_minus1 examples") {
    CHECK(limit_t_minus1(RationalTM(P2("M*t - M*t^-1"), P2("t - t^-1"))).equals(RationalM(PM("M"))));
    CHECK(limit_t_minus1(RationalTM(P2("t*M + M + t + 1"), P2("t*M + M"))).equals(RationalM(PM("M + 1"), PM("M"))));
    const RationalTM b(P2("M^-12*t^-24") * P2("M^10*t^22 + M^-10*t^-18 - M^-2*t^-6 - M^2*t^2"));
    CHECK(limit_t_minus1(b).equals(RationalM(PM("M^-12") * PM("M^10 + M^-10 - M^2 - M^-2"))));
    CHECK_THROWS_AS(limit_t_minus1(RationalTM(P2("M"), P2("t + 1"))), PoleAtMinusOne);
}

TEST_CASE("degree_bounds examples") {
    CHECK(degree_bounds(P1("t^2 + t^-2")) == DegreeBounds{-2, 2});
    CHECK(degree_bounds(P1("t^-2 + t^-6 + t^-10 - t^-18")) == DegreeBounds{-18, -2});
    CHECK_THROWS_AS(degree_bounds(IntLaurent1{}), ZeroPolynomial);
}

TEST_CASE("text format") {
    CHECK(to_text(P1("-t^-18 + t^-10 + t^-6 + t^-2")) == "t^-2 + t^-6 + t^-10 - t^-18");
    CHECK(to_text(IntLaurent1{}) == "0");
    CHECK(to_text(P2("-3*t^2*M^-1 + 5")) == "5 - 3*t^2*M^-1");
    CHECK(to_text(P2("-1")) == "-1");
    CHECK(to_text(P2("t^1*M")) == "t^1*M^1");
    CHECK(to_text(RationalTM(P2("M"), P2("M + 1"))) == "(M^1)/(M^1 + 1)");
    CHECK(to_text(RationalM(PM("M^2 - 1"))) == "M^2 - 1");
    for (const char* s : {"t^-2 + t^-6 + t^-10 - t^-18", "7*M^2 - 2*t^3*M^-4", "1"})
        CHECK(to_text(parse_laurent2(s)) == std::string(s));
}

TEST_CASE("ring axioms and division on random inputs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_poly2(rng), b = random_poly2(rng), c = random_poly2(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const auto d = random_nonzero2(rng);
        CHECK(poly_exact_div(a * d, d) == a);
    }
}

TEST_CASE("substitution is a ring homomorphism; shifts compose") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const auto f = random_poly2(rng), g = random_poly2(rng);
        const int n = static_cast<int>(rng() % 9) - 4, i = static_cast<int>(rng() % 7) - 3,
                  j = static_cast<int>(rng() % 7) - 3;
        CHECK(substitute_M(f * g, n) == substitute_M(f, n) * substitute_M(g, n));
        CHECK(shift_M(shift_M(f, i), j) == shift_M(f, i + j));
        CHECK(substitute_M(shift_M(f, j), n) == substitute_M(f, n + j));
    }
}

TEST_CASE("limit_t_minus1 soundness and canonical idempotence") {
    std::mt19937_64 rng(13);
    const IntLaurent2 tp1 = P2("t + 1");
    int tested = 0;
    for (int it = 0; it < 300; ++it) {
        auto num = random_poly2(rng), den = random_nonzero2(rng);
        const int k = static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            num = num * tp1;
            den = den * tp1;
        }
        const RationalTM f(num, den);
        CHECK(RationalTM(f.num(), f.den()) == f);
        if (!f.den().is_zero() && f.den().is_one() == false) CHECK(f.den().min_exponents() == Mono{0, 0});
        RationalM g;
        try {
            g = limit_t_minus1(f);
        } catch (const PoleAtMinusOne&) {
            continue;
        }
        ++tested;
        const IntLaurent2 diff = f.num() * IntLaurent2::in_M(g.den()) - IntLaurent2::in_M(g.num()) * f.den();
        CHECK(try_exact_div(diff, tp1).has_value());
    }
    CHECK(tested > 50);
}

TEST_CASE("rational arithmetic agrees with cross-multiplication") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        const RationalTM a(random_poly2(rng), random_nonzero2(rng));
        const RationalTM b(random_poly2(rng), random_nonzero2(rng));
        const RationalTM s = a + b, p = a * b;
        CHECK(s.num() * a.den() * b.den() == (a.num() * b.den() + b.num() * a.den()) * s.den());
        CHECK(p.num() * a.den() * b.den() == a.num() * b.num() * p.den());
        CHECK((s - b).num() * a.den() == a.num() * (s - b).den());
    }
    CHECK(RationalTM(P2("2*M + 2"), P2("4*M")) == RationalTM(P2("M + 1"), P2("2*M")));
    CHECK(RationalTM(P2("1"), P2("-M - 1")).den() == P2("M + 1"));
    CHECK(RationalTM(IntLaurent2{}, P2("M + 1")).den().is_one());
}

TEST_CASE("product accumulator matches plain products") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 100; ++it) {
        ProductAccumulator acc;
        IntLaurent1 expect;
        for (int k = 0; k < 3; ++k) {
            std::vector<IntLaurent1::Term> dv, sv;
            const int stride = 1 + static_cast<int>(rng() % 4);
            const int base = static_cast<int>(rng() % 41) - 20;
            for (int i = 0; i < 30; ++i)
                if (rng() % 3) dv.emplace_back(base + stride * i, BigInt(static_cast<long>(rng() % 201) - 100));
            for (int i = 0; i < 6; ++i)
                sv.emplace_back(static_cast<long>(rng() % 61) - 30, BigInt(static_cast<long>(rng() % 21) - 10));
            if (k == 2) sv.emplace_back(99, BigInt(1) << 70);
            const auto d = IntLaurent1::from_terms(dv), s = IntLaurent1::from_terms(sv);
            acc.add_product(s, DenseLaurent::from(d));
            expect += s * d;
        }
        CHECK(acc.result() == expect);
    }
}
