#include "ajcable/laurent.hpp"

#include "ajcable/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace ajcable {

namespace {

template <class Key>
void sort_and_combine(std::vector<std::pair<Key, BigInt>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        BigInt acc = std::move(v[i].second);
        while (j < v.size() && v[j].first == v[i].first) {
            acc += v[j].second;
            ++j;
        }
        if (!acc.is_zero()) {
            v[out].first = v[i].first;
            v[out].second = std::move(acc);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

template <class Key>
std::vector<std::pair<Key, BigInt>> merge_terms(const std::vector<std::pair<Key, BigInt>>& a,
                                                const std::vector<std::pair<Key, BigInt>>& b,
                                                bool subtract) {
    std::vector<std::pair<Key, BigInt>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? BigInt(-b[j].second) : b[j].second);
            ++j;
        } else {
            BigInt c = subtract ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Key>
BigInt content_of(const std::vector<std::pair<Key, BigInt>>& v) {
    BigInt g = 0;
    for (const auto& [k, c] : v) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

constexpr std::int64_t kSmall = std::int64_t{1} << 31;

bool small_coeffs(const std::vector<IntLaurent1::Term>& v, std::int64_t& max_abs) {
    max_abs = 0;
    for (const auto& [e, c] : v) {
        if (c >= kSmall || c <= -kSmall) return false;
        max_abs = std::max(max_abs, std::abs(c.convert_to<std::int64_t>()));
    }
    return true;
}

// Dense int64 convolution when the output range and coefficient bound allow it.
std::optional<IntLaurent1> dense_mul(const IntLaurent1& a, const IntLaurent1& b) {
    std::int64_t ma = 0, mb = 0;
    if (!small_coeffs(a.terms(), ma) || !small_coeffs(b.terms(), mb)) return std::nullopt;
    const std::int64_t lo = a.low() + b.low();
    const std::int64_t hi = a.high() + b.high();
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t work = a.size() * b.size();
    if (n > 4 * work + 1024) return std::nullopt;
    const std::size_t nnz = std::min(a.size(), b.size());
    if (static_cast<long double>(ma) * mb * static_cast<long double>(nnz) > 4.0e18L) return std::nullopt;
    std::vector<std::int64_t> acc(n, 0);
    for (const auto& [ea, ca] : a.terms()) {
        const std::int64_t x = ca.convert_to<std::int64_t>();
        for (const auto& [eb, cb] : b.terms()) acc[static_cast<std::size_t>(ea + eb - lo)] += x * cb.convert_to<std::int64_t>();
    }
    std::vector<IntLaurent1::Term> out;
    for (std::size_t i = 0; i < n; ++i)
        if (acc[i] != 0) out.emplace_back(lo + static_cast<std::int64_t>(i), BigInt(acc[i]));
    return IntLaurent1::from_sorted(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------- IntLaurent1

IntLaurent1::IntLaurent1(const BigInt& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
}

IntLaurent1 IntLaurent1::monomial(std::int64_t e, const BigInt& c) {
    IntLaurent1 r;
    if (!c.is_zero()) r.terms_.emplace_back(e, c);
    return r;
}

IntLaurent1 IntLaurent1::from_terms(std::vector<Term> terms) {
    sort_and_combine(terms);
    IntLaurent1 r;
    r.terms_ = std::move(terms);
    return r;
}

IntLaurent1 IntLaurent1::from_sorted(std::vector<Term> terms) {
    IntLaurent1 r;
    r.terms_ = std::move(terms);
    return r;
}

bool IntLaurent1::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

std::int64_t IntLaurent1::low() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front().first;
}

std::int64_t IntLaurent1::high() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.back().first;
}

BigInt IntLaurent1::coeff(std::int64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int64_t x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

BigInt IntLaurent1::content() const { return content_of(terms_); }

BigInt IntLaurent1::eval_at_minus1() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) {
        if (e % 2 == 0)
            s += c;
        else
            s -= c;
    }
    return s;
}

IntLaurent1 IntLaurent1::shifted(std::int64_t k) const {
    IntLaurent1 r = *this;
    for (auto& [e, c] : r.terms_) e += k;
    return r;
}

IntLaurent1 IntLaurent1::scaled(const BigInt& k) const {
    if (k.is_zero()) return {};
    IntLaurent1 r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
}

IntLaurent1 IntLaurent1::negated() const {
    IntLaurent1 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

IntLaurent1 IntLaurent1::divided_exact(const BigInt& k) const {
    IntLaurent1 r = *this;
    for (auto& [e, c] : r.terms_) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(c, k, q, rem);
        if (!rem.is_zero()) throw NotDivisible();
        c = std::move(q);
    }
    return r;
}

IntLaurent1 IntLaurent1::exponent_scaled(std::int64_t k) const {
    std::vector<Term> v = terms_;
    for (auto& [e, c] : v) e *= k;
    if (k < 0) std::reverse(v.begin(), v.end());
    return from_sorted(std::move(v));
}

IntLaurent1& IntLaurent1::operator+=(const IntLaurent1& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

IntLaurent1& IntLaurent1::operator-=(const IntLaurent1& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

IntLaurent1 operator*(const IntLaurent1& a, const IntLaurent1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
    if (b.size() == 1) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
    if (auto d = dense_mul(a, b)) return std::move(*d);
    std::vector<IntLaurent1::Term> v;
    v.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) v.emplace_back(ea + eb, ca * cb);
    return IntLaurent1::from_terms(std::move(v));
}

// ---------------------------------------------------------------- IntLaurent2

IntLaurent2::IntLaurent2(const BigInt& c) {
    if (!c.is_zero()) terms_.emplace_back(Mono{0, 0}, c);
}

IntLaurent2 IntLaurent2::monomial(std::int64_t t, std::int64_t m, const BigInt& c) {
    IntLaurent2 r;
    if (!c.is_zero()) r.terms_.emplace_back(Mono{t, m}, c);
    return r;
}

IntLaurent2 IntLaurent2::from_terms(std::vector<Term> terms) {
    sort_and_combine(terms);
    IntLaurent2 r;
    r.terms_ = std::move(terms);
    return r;
}

IntLaurent2 IntLaurent2::from_sorted(std::vector<Term> terms) {
    IntLaurent2 r;
    r.terms_ = std::move(terms);
    return r;
}

IntLaurent2 IntLaurent2::in_t(const IntLaurent1& f) {
    std::vector<Term> v;
    v.reserve(f.size());
    for (const auto& [e, c] : f.terms()) v.emplace_back(Mono{e, 0}, c);
    return from_sorted(std::move(v));
}

IntLaurent2 IntLaurent2::in_M(const IntLaurent1& f) {
    std::vector<Term> v;
    v.reserve(f.size());
    for (const auto& [e, c] : f.terms()) v.emplace_back(Mono{0, e}, c);
    return from_sorted(std::move(v));
}

bool IntLaurent2::is_one() const {
    return terms_.size() == 1 && terms_[0].first == Mono{0, 0} && terms_[0].second == 1;
}

BigInt IntLaurent2::content() const { return content_of(terms_); }

Mono IntLaurent2::min_exponents() const {
    if (terms_.empty()) throw ZeroPolynomial();
    Mono r = terms_.front().first;
    for (const auto& [k, c] : terms_) {
        r.t = std::min(r.t, k.t);
        r.m = std::min(r.m, k.m);
    }
    return r;
}

Mono IntLaurent2::max_exponents() const {
    if (terms_.empty()) throw ZeroPolynomial();
    Mono r = terms_.front().first;
    for (const auto& [k, c] : terms_) {
        r.t = std::max(r.t, k.t);
        r.m = std::max(r.m, k.m);
    }
    return r;
}

bool IntLaurent2::m_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.first.m == 0; });
}

IntLaurent2 IntLaurent2::shifted(std::int64_t dt, std::int64_t dm) const {
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.terms_) {
        k.t += dt;
        k.m += dm;
    }
    return r;
}

IntLaurent2 IntLaurent2::scaled(const BigInt& x) const {
    if (x.is_zero()) return {};
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.terms_) c *= x;
    return r;
}

IntLaurent2 IntLaurent2::negated() const {
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

IntLaurent2 IntLaurent2::divided_exact(const BigInt& x) const {
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.terms_) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(c, x, q, rem);
        if (!rem.is_zero()) throw NotDivisible();
        c = std::move(q);
    }
    return r;
}

IntLaurent2 IntLaurent2::shift_M(std::int64_t j) const {
    // Adds 2jb to the t-exponent of M^b; (m, t) order is preserved within each M-slice.
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.terms_) k.t += 2 * j * k.m;
    return r;
}

IntLaurent1 IntLaurent2::substitute_M(std::int64_t n) const {
    std::vector<IntLaurent1::Term> v;
    v.reserve(terms_.size());
    for (const auto& [k, c] : terms_) v.emplace_back(k.t + 2 * n * k.m, c);
    return IntLaurent1::from_terms(std::move(v));
}

IntLaurent1 IntLaurent2::eval_t_minus1() const {
    std::vector<IntLaurent1::Term> v;
    v.reserve(terms_.size());
    for (const auto& [k, c] : terms_) v.emplace_back(k.m, (k.t % 2 == 0) ? c : BigInt(-c));
    return IntLaurent1::from_terms(std::move(v));
}

IntLaurent2 IntLaurent2::m_scaled(std::int64_t k) const {
    std::vector<Term> v = terms_;
    for (auto& [mono, c] : v) mono.m *= k;
    return from_terms(std::move(v));
}

IntLaurent2& IntLaurent2::operator+=(const IntLaurent2& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

IntLaurent2& IntLaurent2::operator-=(const IntLaurent2& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

IntLaurent2 operator*(const IntLaurent2& a, const IntLaurent2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first.t, a.terms_[0].first.m);
    if (b.size() == 1) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first.t, b.terms_[0].first.m);
    // Group by M-exponent so each slice product is a univariate convolution.
    std::map<std::int64_t, IntLaurent1> slices_a, slices_b;
    auto slice = [](const IntLaurent2& f, std::map<std::int64_t, IntLaurent1>& out) {
        std::size_t i = 0;
        const auto& v = f.terms();
        while (i < v.size()) {
            std::size_t j = i;
            std::vector<IntLaurent1::Term> s;
            while (j < v.size() && v[j].first.m == v[i].first.m) {
                s.emplace_back(v[j].first.t, v[j].second);
                ++j;
            }
            out.emplace(v[i].first.m, IntLaurent1::from_sorted(std::move(s)));
            i = j;
        }
    };
    slice(a, slices_a);
    slice(b, slices_b);
    std::map<std::int64_t, IntLaurent1> acc;
    for (const auto& [ma, fa] : slices_a)
        for (const auto& [mb, fb] : slices_b) acc[ma + mb] += fa * fb;
    std::vector<IntLaurent2::Term> v;
    for (const auto& [m, f] : acc)
        for (const auto& [e, c] : f.terms()) v.emplace_back(Mono{e, m}, c);
    return IntLaurent2::from_sorted(std::move(v));
}

IntLaurent2 poly_mul(const IntLaurent2& a, const IntLaurent2& b) { return a * b; }
IntLaurent1 poly_mul(const IntLaurent1& a, const IntLaurent1& b) { return a * b; }

// ---------------------------------------------------------------- division

namespace {

bool divides(const BigInt& d, const BigInt& x, BigInt& q) {
    BigInt r;
    boost::multiprecision::divide_qr(x, d, q, r);
    return r.is_zero();
}

}  // namespace

std::optional<IntLaurent1> try_exact_div(const IntLaurent1& a, const IntLaurent1& b) {
    if (b.is_zero()) throw DivByZero();
    if (a.is_zero()) return IntLaurent1{};
    const std::int64_t la = a.low(), lb = b.low();
    const std::int64_t da = a.high() - la, db = b.high() - lb;
    if (da < db) return std::nullopt;
    BigInt q;
    if (!divides(b.terms().back().second, a.terms().back().second, q)) return std::nullopt;
    if (!divides(b.terms().front().second, a.terms().front().second, q)) return std::nullopt;
    if (b.size() == 1) {
        try {
            return a.divided_exact(b.terms()[0].second).shifted(-lb);
        } catch (const NotDivisible&) {
            return std::nullopt;
        }
    }

    // Long division on exponents normalized to start at zero, highest term first.
    std::map<std::int64_t, BigInt> rem;
    for (const auto& [e, c] : a.terms()) rem.emplace_hint(rem.end(), e - la, c);
    const BigInt& lead = b.terms().back().second;
    std::vector<IntLaurent1::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const std::int64_t e = top->first;
        if (e < db) return std::nullopt;
        BigInt qc;
        if (!divides(lead, top->second, qc)) return std::nullopt;
        const std::int64_t qe = e - db;
        for (const auto& [eb, cb] : b.terms()) {
            auto [it, fresh] = rem.try_emplace(eb - lb + qe, 0);
            it->second -= qc * cb;
            if (it->second.is_zero()) rem.erase(it);
        }
        quot.emplace_back(qe + la - lb, std::move(qc));
    }
    std::reverse(quot.begin(), quot.end());
    return IntLaurent1::from_sorted(std::move(quot));
}

IntLaurent1 poly_exact_div(const IntLaurent1& a, const IntLaurent1& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible();
    return std::move(*q);
}

std::optional<IntLaurent2> try_exact_div(const IntLaurent2& a, const IntLaurent2& b) {
    if (b.is_zero()) throw DivByZero();
    if (a.is_zero()) return IntLaurent2{};
    const Mono amin = a.min_exponents(), bmin = b.min_exponents();
    const Mono amax = a.max_exponents(), bmax = b.max_exponents();
    if (amax.t - amin.t < bmax.t - bmin.t || amax.m - amin.m < bmax.m - bmin.m) return std::nullopt;
    BigInt q;
    if (!divides(b.terms().back().second, a.terms().back().second, q)) return std::nullopt;
    if (!divides(b.terms().front().second, a.terms().front().second, q)) return std::nullopt;
    if (b.is_monomial()) {
        try {
            return a.divided_exact(b.terms()[0].second).shifted(-bmin.t, -bmin.m);
        } catch (const NotDivisible&) {
            return std::nullopt;
        }
    }
    if (a.m_free() && b.m_free()) {
        auto qt = try_exact_div(a.substitute_M(0), b.substitute_M(0));
        if (!qt) return std::nullopt;
        return IntLaurent2::in_t(*qt);
    }

    // Both operands are made genuine polynomials; the quotient is then a polynomial
    // too, so every quotient term must have nonnegative exponents.
    std::map<Mono, BigInt> rem;
    for (const auto& [k, c] : a.terms()) rem.emplace_hint(rem.end(), Mono{k.t - amin.t, k.m - amin.m}, c);
    std::vector<IntLaurent2::Term> bn;
    for (const auto& [k, c] : b.terms()) bn.emplace_back(Mono{k.t - bmin.t, k.m - bmin.m}, c);
    const Mono lead_e = bn.back().first;
    const BigInt& lead = bn.back().second;
    std::vector<IntLaurent2::Term> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const Mono e = top->first;
        if (e.m < lead_e.m || e.t < lead_e.t) return std::nullopt;
        BigInt qc;
        if (!divides(lead, top->second, qc)) return std::nullopt;
        const Mono qe{e.t - lead_e.t, e.m - lead_e.m};
        for (const auto& [kb, cb] : bn) {
            auto [it, fresh] = rem.try_emplace(Mono{kb.t + qe.t, kb.m + qe.m}, 0);
            it->second -= qc * cb;
            if (it->second.is_zero()) rem.erase(it);
        }
        quot.emplace_back(Mono{qe.t + amin.t - bmin.t, qe.m + amin.m - bmin.m}, std::move(qc));
    }
    return IntLaurent2::from_terms(std::move(quot));
}

IntLaurent2 poly_exact_div(const IntLaurent2& a, const IntLaurent2& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible();
    return std::move(*q);
}

DegreeBounds degree_bounds(const IntLaurent1& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    return {f.low(), f.high()};
}

const IntLaurent1& qint_den() {
    static const IntLaurent1 d = IntLaurent1::from_sorted({{-2, BigInt(-1)}, {2, BigInt(1)}});
    return d;
}

}  // namespace ajcable
