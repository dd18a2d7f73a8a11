#include "ajcable/rational.hpp"

#include "ajcable/errors.hpp"

namespace ajcable {

namespace {

void canonicalize(IntLaurent2& num, IntLaurent2& den) {
    if (den.is_zero()) throw DivByZero();
    if (num.is_zero()) {
        den = IntLaurent2(1);
        return;
    }
    const Mono dmin = den.min_exponents();
    if (dmin.t != 0 || dmin.m != 0) {
        den = den.shifted(-dmin.t, -dmin.m);
        num = num.shifted(-dmin.t, -dmin.m);
    }
    const BigInt g = boost::multiprecision::gcd(num.content(), den.content());
    if (g != 1) {
        num = num.divided_exact(g);
        den = den.divided_exact(g);
    }
    if (den.terms().front().second < 0) {
        num = num.negated();
        den = den.negated();
    }
}

void canonicalize(IntLaurent1& num, IntLaurent1& den) {
    if (den.is_zero()) throw DivByZero();
    if (num.is_zero()) {
        den = IntLaurent1(1);
        return;
    }
    const std::int64_t dl = den.low();
    if (dl != 0) {
        den = den.shifted(-dl);
        num = num.shifted(-dl);
    }
    const BigInt g = boost::multiprecision::gcd(num.content(), den.content());
    if (g != 1) {
        num = num.divided_exact(g);
        den = den.divided_exact(g);
    }
    if (den.terms().front().second < 0) {
        num = num.negated();
        den = den.negated();
    }
}

// Replaces n/d by an exactly reduced pair when one divides the other.
template <class P>
void cross_cancel(P& n, P& d) {
    if (d.is_one() || n.is_zero()) return;
    if (auto q = try_exact_div(n, d)) {
        n = std::move(*q);
        d = P(1);
        return;
    }
    if (auto q = try_exact_div(d, n)) {
        d = std::move(*q);
        n = P(1);
    }
}

template <class P>
std::pair<P, P> add_fractions(const P& n1, const P& d1, const P& n2, const P& d2) {
    if (d1 == d2) return {n1 + n2, d1};
    if (d1.is_one()) return {n1 * d2 + n2, d2};
    if (d2.is_one()) return {n1 + n2 * d1, d1};
    if (auto q = try_exact_div(d2, d1)) return {n1 * *q + n2, d2};
    if (auto q = try_exact_div(d1, d2)) return {n1 + n2 * *q, d1};
    return {n1 * d2 + n2 * d1, d1 * d2};
}

template <class P>
std::pair<P, P> mul_fractions(P n1, P d1, P n2, P d2) {
    cross_cancel(n1, d2);
    cross_cancel(n2, d1);
    return {n1 * n2, d1 * d2};
}

}  // namespace

// ---------------------------------------------------------------- RationalTM

RationalTM::RationalTM(IntLaurent2 num) : num_(std::move(num)), den_(1) {}

RationalTM::RationalTM(IntLaurent2 num, IntLaurent2 den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize(num_, den_);
}

RationalTM RationalTM::shift_M(std::int64_t j) const { return {num_.shift_M(j), den_.shift_M(j)}; }

RationalTM RationalTM::inverse() const {
    if (num_.is_zero()) throw DivByZero();
    return {den_, num_};
}

RationalTM RationalTM::operator-() const {
    RationalTM r = *this;
    r.num_ = r.num_.negated();
    return r;
}

RationalTM operator+(const RationalTM& a, const RationalTM& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [n, d] = add_fractions(a.num_, a.den_, b.num_, b.den_);
    return {std::move(n), std::move(d)};
}

RationalTM operator*(const RationalTM& a, const RationalTM& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalTM(a.num_ * b.num_);
    auto [n, d] = mul_fractions(a.num_, a.den_, b.num_, b.den_);
    return {std::move(n), std::move(d)};
}

// ---------------------------------------------------------------- RationalM

RationalM::RationalM(IntLaurent1 num) : num_(std::move(num)), den_(1) {}

RationalM::RationalM(IntLaurent1 num, IntLaurent1 den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize(num_, den_);
}

RationalM RationalM::inverse() const {
    if (num_.is_zero()) throw DivByZero();
    return {den_, num_};
}

RationalM RationalM::operator-() const {
    RationalM r = *this;
    r.num_ = r.num_.negated();
    return r;
}

RationalM operator+(const RationalM& a, const RationalM& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [n, d] = add_fractions(a.num_, a.den_, b.num_, b.den_);
    return {std::move(n), std::move(d)};
}

RationalM operator*(const RationalM& a, const RationalM& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto [n, d] = mul_fractions(a.num_, a.den_, b.num_, b.den_);
    return {std::move(n), std::move(d)};
}

bool RationalM::equals(const RationalM& o) const { return num_ * o.den_ == o.num_ * den_; }

// ---------------------------------------------------------------- limit

RationalM limit_t_minus1(const RationalTM& f) {
    static const IntLaurent2 t_plus_1 = IntLaurent2::monomial(1, 0) + IntLaurent2(1);
    IntLaurent2 num = f.num(), den = f.den();
    for (;;) {
        IntLaurent1 nv = num.eval_t_minus1();
        IntLaurent1 dv = den.eval_t_minus1();
        if (!dv.is_zero()) return {std::move(nv), std::move(dv)};
        if (!nv.is_zero()) throw PoleAtMinusOne();
        num = poly_exact_div(num, t_plus_1);
        den = poly_exact_div(den, t_plus_1);
    }
}

}  // namespace ajcable
