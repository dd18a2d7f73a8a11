#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//
// IntLaurent1 is univariate; the variable is t for Jones values and M for
// the t = -1 specializations. IntLaurent2 lives in Z[t^±1, M^±1] and keeps
// its terms sorted ascending by (M-exponent, t-exponent).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ajcable {

using BigInt = boost::multiprecision::cpp_int;

class IntLaurent1 {
public:
    using Term = std::pair<std::int64_t, BigInt>;

    IntLaurent1() = default;
    explicit IntLaurent1(const BigInt& c);

    static IntLaurent1 monomial(std::int64_t e, const BigInt& c = 1);
    // Combines duplicates and drops zeros; input order is irrelevant.
    static IntLaurent1 from_terms(std::vector<Term> terms);
    // Caller guarantees strictly ascending exponents and nonzero coefficients.
    static IntLaurent1 from_sorted(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const noexcept { return terms_.size(); }
    std::int64_t low() const;
    std::int64_t high() const;
    BigInt coeff(std::int64_t e) const;
    BigInt content() const;
    BigInt eval_at_minus1() const;

    IntLaurent1 shifted(std::int64_t k) const;
    IntLaurent1 scaled(const BigInt& c) const;
    IntLaurent1 negated() const;
    IntLaurent1 divided_exact(const BigInt& c) const;
    // f(x) -> f(x^k) for k != 0.
    IntLaurent1 exponent_scaled(std::int64_t k) const;

    IntLaurent1& operator+=(const IntLaurent1& o);
    IntLaurent1& operator-=(const IntLaurent1& o);
    friend IntLaurent1 operator+(IntLaurent1 a, const IntLaurent1& b) { return a += b; }
    friend IntLaurent1 operator-(IntLaurent1 a, const IntLaurent1& b) { return a -= b; }
    friend IntLaurent1 operator-(const IntLaurent1& a) { return a.negated(); }
    friend IntLaurent1 operator*(const IntLaurent1& a, const IntLaurent1& b);
    friend bool operator==(const IntLaurent1&, const IntLaurent1&) = default;

private:
    std::vector<Term> terms_;
};

struct Mono {
    std::int64_t t = 0;
    std::int64_t m = 0;

    friend bool operator==(const Mono&, const Mono&) = default;
    // Canonical order: M-exponent first, then t-exponent.
    friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
        if (auto c = a.m <=> b.m; c != 0) return c;
        return a.t <=> b.t;
    }
};

class IntLaurent2 {
public:
    using Term = std::pair<Mono, BigInt>;

    IntLaurent2() = default;
    explicit IntLaurent2(const BigInt& c);

    static IntLaurent2 monomial(std::int64_t t, std::int64_t m, const BigInt& c = 1);
    static IntLaurent2 from_terms(std::vector<Term> terms);
    static IntLaurent2 from_sorted(std::vector<Term> terms);
    static IntLaurent2 in_t(const IntLaurent1& f);
    static IntLaurent2 in_M(const IntLaurent1& f);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt content() const;
    Mono min_exponents() const;
    Mono max_exponents() const;
    bool m_free() const;

    IntLaurent2 shifted(std::int64_t dt, std::int64_t dm) const;
    IntLaurent2 scaled(const BigInt& c) const;
    IntLaurent2 negated() const;
    IntLaurent2 divided_exact(const BigInt& c) const;
    // M -> t^{2j} M
    IntLaurent2 shift_M(std::int64_t j) const;
    // M -> t^{2n}
    IntLaurent1 substitute_M(std::int64_t n) const;
    // t -> -1, result is a Laurent polynomial in M.
    IntLaurent1 eval_t_minus1() const;
    // M -> M^k
    IntLaurent2 m_scaled(std::int64_t k) const;

    IntLaurent2& operator+=(const IntLaurent2& o);
    IntLaurent2& operator-=(const IntLaurent2& o);
    friend IntLaurent2 operator+(IntLaurent2 a, const IntLaurent2& b) { return a += b; }
    friend IntLaurent2 operator-(IntLaurent2 a, const IntLaurent2& b) { return a -= b; }
    friend IntLaurent2 operator-(const IntLaurent2& a) { return a.negated(); }
    friend IntLaurent2 operator*(const IntLaurent2& a, const IntLaurent2& b);
    friend bool operator==(const IntLaurent2&, const IntLaurent2&) = default;

private:
    std::vector<Term> terms_;
};

IntLaurent2 poly_mul(const IntLaurent2& a, const IntLaurent2& b);
IntLaurent1 poly_mul(const IntLaurent1& a, const IntLaurent1& b);

// Throws DivByZero for b = 0 and NotDivisible when no Laurent quotient exists.
IntLaurent2 poly_exact_div(const IntLaurent2& a, const IntLaurent2& b);
IntLaurent1 poly_exact_div(const IntLaurent1& a, const IntLaurent1& b);
std::optional<IntLaurent2> try_exact_div(const IntLaurent2& a, const IntLaurent2& b);
std::optional<IntLaurent1> try_exact_div(const IntLaurent1& a, const IntLaurent1& b);

inline IntLaurent1 substitute_M(const IntLaurent2& f, std::int64_t n) { return f.substitute_M(n); }
inline IntLaurent2 shift_M(const IntLaurent2& f, std::int64_t j) { return f.shift_M(j); }

struct DegreeBounds {
    std::int64_t lowest;
    std::int64_t highest;
    friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

// Throws ZeroPolynomial for f = 0.
DegreeBounds degree_bounds(const IntLaurent1& f);

// t^2 - t^-2, the quantum-integer denominator.
const IntLaurent1& qint_den();

}  // namespace ajcable
