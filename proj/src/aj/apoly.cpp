#include "ajcable/aj.hpp"

#include "ajcable/errors.hpp"
#include "ajcable/format.hpp"

#include <numeric>

namespace ajcable {

LPolynomialOverM LPolynomialOverM::monomial(std::int64_t d, const RationalM& c) {
    LPolynomialOverM r;
    if (!c.is_zero()) r.coeffs_.emplace(d, c);
    return r;
}

std::int64_t LPolynomialOverM::degree() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.rbegin()->first;
}

RationalM LPolynomialOverM::coeff(std::int64_t d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? RationalM() : it->second;
}

LPolynomialOverM& LPolynomialOverM::operator+=(const LPolynomialOverM& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(d, c);
        if (fresh) continue;
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

LPolynomialOverM operator-(LPolynomialOverM a, const LPolynomialOverM& b) {
    for (const auto& [d, c] : b.coeffs_) a += LPolynomialOverM::monomial(d, -c);
    return a;
}

LPolynomialOverM operator*(const LPolynomialOverM& a, const LPolynomialOverM& b) {
    LPolynomialOverM r;
    for (const auto& [da, fa] : a.coeffs_)
        for (const auto& [db, gb] : b.coeffs_) r += LPolynomialOverM::monomial(da + db, fa * gb);
    return r;
}

std::string to_text(const LPolynomialOverM& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : f.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_text(c) + ")*L^" + std::to_string(d);
    }
    return out;
}

std::string case_name(CaseTag c) {
    switch (c) {
        case CaseTag::S_ODD_QGT2: return "S_ODD_QGT2";
        case CaseTag::S_ODD_Q2: return "S_ODD_Q2";
        case CaseTag::S_EVEN_GT2: return "S_EVEN_GT2";
        case CaseTag::S_EQ_2: return "S_EQ_2";
    }
    return "?";
}

CaseTag case_of(const CablingParams& c) {
    if (c.s == 2) return CaseTag::S_EQ_2;
    if (c.s % 2 == 0) return CaseTag::S_EVEN_GT2;
    if (c.q == 2) return CaseTag::S_ODD_Q2;
    return CaseTag::S_ODD_QGT2;
}

std::int64_t expected_l_degree(CaseTag c) {
    switch (c) {
        case CaseTag::S_ODD_QGT2: return 5;
        case CaseTag::S_ODD_Q2:
        case CaseTag::S_EVEN_GT2: return 4;
        case CaseTag::S_EQ_2: return 3;
    }
    return 0;
}

namespace {

LPolynomialOverM term(std::int64_t d, std::int64_t m_exp, int c = 1) {
    return LPolynomialOverM::monomial(d, RationalM(IntLaurent1::monomial(m_exp, c)));
}

void check_pair(std::int64_t p, std::int64_t q) {
    if (q < 2 || p == 0) throw BadParams("need q >= 2 and p != 0");
    if (std::gcd(p, q) != 1) throw BadParams("p and q must be coprime");
}

}  // namespace

LPolynomialOverM f_poly(std::int64_t p, std::int64_t q) {
    check_pair(p, q);
    if (q == 2) return p > 0 ? term(1, 2 * p) + term(0, 0) : term(1, 0) + term(0, -2 * p);
    return p > 0 ? term(2, 2 * p * q) - term(0, 0) : term(2, 0) - term(0, -2 * p * q);
}

LPolynomialOverM g_poly(std::int64_t p, std::int64_t q) {
    check_pair(p, q);
    return p > 0 ? term(1, p * q) - term(0, 0) : term(1, 0) - term(0, -p * q);
}

LPolynomialOverM m_power(const LPolynomialOverM& f, std::int64_t k) {
    LPolynomialOverM r;
    for (const auto& [d, c] : f.coeffs())
        r += LPolynomialOverM::monomial(d, RationalM(c.num().exponent_scaled(k), c.den().exponent_scaled(k)));
    return r;
}

LPolynomialOverM cabled_a_polynomial(const CablingParams& c) {
    c.validate();
    const LPolynomialOverM base = c.s % 2 != 0 ? f_poly(c.p, c.q) : g_poly(c.p, c.q);
    return (term(1, 0) - term(0, 0)) * f_poly(c.r, c.s) * m_power(base, c.s * c.s);
}

}  // namespace ajcable
