#include "ajcable/qtorus.hpp"

#include "ajcable/errors.hpp"
#include "ajcable/format.hpp"

namespace ajcable {

SkewOperator SkewOperator::monomial(std::int64_t d, const RationalTM& c) {
    SkewOperator r;
    if (!c.is_zero()) r.coeffs_.emplace(d, c);
    return r;
}

std::int64_t SkewOperator::min_degree() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.begin()->first;
}

std::int64_t SkewOperator::max_degree() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.rbegin()->first;
}

RationalTM SkewOperator::coeff(std::int64_t d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? RationalTM() : it->second;
}

bool SkewOperator::has_polynomial_coeffs() const {
    for (const auto& [d, c] : coeffs_)
        if (!c.is_polynomial()) return false;
    return true;
}

SkewOperator& SkewOperator::operator+=(const SkewOperator& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(d, c);
        if (fresh) continue;
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

SkewOperator& SkewOperator::operator-=(const SkewOperator& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(d, -c);
        if (fresh) continue;
        it->second = it->second - c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

SkewOperator operator*(const SkewOperator& a, const SkewOperator& b) {
    // Collect all contributions per L-degree first so each degree is summed once.
    std::map<std::int64_t, std::vector<RationalTM>> parts;
    for (const auto& [da, fa] : a.coeffs_)
        for (const auto& [db, gb] : b.coeffs_) parts[da + db].push_back(fa * gb.shift_M(da));
    SkewOperator r;
    for (auto& [d, v] : parts) {
        RationalTM s = v.front();
        for (std::size_t i = 1; i < v.size(); ++i) s = s + v[i];
        if (!s.is_zero()) r.coeffs_.emplace(d, std::move(s));
    }
    return r;
}

SkewOperator skew_multiply(const SkewOperator& p, const SkewOperator& q) { return p * q; }

std::string to_text(const SkewOperator& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : p.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_text(c) + ")*L^" + std::to_string(d);
    }
    return out;
}

}  // namespace ajcable
