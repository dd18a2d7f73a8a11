#pragma once

// Fractions of Laurent polynomials.
//
// Canonical form: the denominator is a genuine polynomial with minimal
// exponents zero, its first term in canonical order is positive, and the
// integer contents of numerator and denominator are coprime. Monomial factors
// live in the numerator. No polynomial gcd is ever taken; arithmetic only
// cancels factors that divide exactly.

#include "ajcable/laurent.hpp"

namespace ajcable {

class RationalTM {
public:
    RationalTM() : den_(1) {}
    RationalTM(IntLaurent2 num);  // NOLINT(google-explicit-constructor)
    RationalTM(IntLaurent2 num, IntLaurent2 den);

    const IntLaurent2& num() const noexcept { return num_; }
    const IntLaurent2& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalTM shift_M(std::int64_t j) const;
    RationalTM inverse() const;
    RationalTM operator-() const;

    friend RationalTM operator+(const RationalTM& a, const RationalTM& b);
    friend RationalTM operator-(const RationalTM& a, const RationalTM& b) { return a + (-b); }
    friend RationalTM operator*(const RationalTM& a, const RationalTM& b);
    friend RationalTM operator/(const RationalTM& a, const RationalTM& b) { return a * b.inverse(); }
    friend bool operator==(const RationalTM&, const RationalTM&) = default;

private:
    IntLaurent2 num_;
    IntLaurent2 den_;
};

class RationalM {
public:
    RationalM() : den_(1) {}
    RationalM(IntLaurent1 num);  // NOLINT(google-explicit-constructor)
    RationalM(IntLaurent1 num, IntLaurent1 den);

    const IntLaurent1& num() const noexcept { return num_; }
    const IntLaurent1& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalM inverse() const;
    RationalM operator-() const;
    friend RationalM operator+(const RationalM& a, const RationalM& b);
    friend RationalM operator-(const RationalM& a, const RationalM& b) { return a + (-b); }
    friend RationalM operator*(const RationalM& a, const RationalM& b);
    friend RationalM operator/(const RationalM& a, const RationalM& b) { return a * b.inverse(); }
    // Value equality over Q(M), by cross-multiplication.
    bool equals(const RationalM& o) const;
    friend bool operator==(const RationalM&, const RationalM&) = default;

private:
    IntLaurent1 num_;
    IntLaurent1 den_;
};

// Cancels common (t+1) factors, then sets t = -1. Throws PoleAtMinusOne.
RationalM limit_t_minus1(const RationalTM& f);

}  // namespace ajcable
