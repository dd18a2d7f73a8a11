#include "ajcable/errors.hpp"
#include "ajcable/qtorus.hpp"

#include <mutex>
#include <unordered_map>

namespace ajcable {

struct DiscreteSequence::State {
    Fn fn;
    bool odd = false;
    std::mutex mu;
    std::unordered_map<std::int64_t, IntLaurent1> values;
    std::unordered_map<std::int64_t, DenseLaurent> dense;
};

DiscreteSequence::DiscreteSequence(Fn fn, bool odd) : st_(std::make_shared<State>()) {
    st_->fn = std::move(fn);
    st_->odd = odd;
}

bool DiscreteSequence::odd() const { return st_->odd; }

// Unordered-map nodes never move, so references handed out stay valid while
// the sequence lives. Values are computed outside the lock; the first insert wins.
const IntLaurent1& DiscreteSequence::operator()(std::int64_t n) const {
    {
        std::lock_guard lk(st_->mu);
        auto it = st_->values.find(n);
        if (it != st_->values.end()) return it->second;
    }
    IntLaurent1 v;
    if (st_->odd && n <= 0)
        v = n == 0 ? IntLaurent1{} : (*this)(-n).negated();
    else
        v = st_->fn(n);
    std::lock_guard lk(st_->mu);
    return st_->values.try_emplace(n, std::move(v)).first->second;
}

const DenseLaurent& DiscreteSequence::dense(std::int64_t n) const {
    {
        std::lock_guard lk(st_->mu);
        auto it = st_->dense.find(n);
        if (it != st_->dense.end()) return it->second;
    }
    DenseLaurent d = DenseLaurent::from((*this)(n));
    std::lock_guard lk(st_->mu);
    return st_->dense.try_emplace(n, std::move(d)).first->second;
}

namespace {

// Cheap common multiple: skips factors already dividing the running product.
template <class P>
P common_multiple(const std::vector<P>& dens) {
    P c(1);
    for (const auto& d : dens) {
        if (d.is_one() || try_exact_div(c, d)) continue;
        if (try_exact_div(d, c))
            c = d;
        else
            c = c * d;
    }
    return c;
}

}  // namespace

IntLaurent1 apply_operator(const SkewOperator& p, const DiscreteSequence& f, std::int64_t n) {
    struct Part {
        std::int64_t i;
        IntLaurent1 num, den;
    };
    std::vector<Part> parts;
    std::vector<IntLaurent1> dens;
    for (const auto& [i, c] : p.coeffs()) {
        IntLaurent1 den = c.den().substitute_M(n);
        if (den.is_zero()) throw DenominatorVanishes(n);
        dens.push_back(den);
        parts.push_back({i, c.num().substitute_M(n), std::move(den)});
    }
    const IntLaurent1 common = common_multiple(dens);
    ProductAccumulator acc;
    for (const auto& part : parts) {
        const IntLaurent1 scale = part.den.is_one() ? common : poly_exact_div(common, part.den);
        acc.add_product(part.num * scale, f.dense(n + part.i));
    }
    IntLaurent1 total = acc.result();
    return common.is_one() ? total : poly_exact_div(total, common);
}

Cleared clear_denominators(const SkewOperator& p) {
    std::vector<IntLaurent2> dens;
    for (const auto& [d, c] : p.coeffs())
        if (!c.is_polynomial()) dens.push_back(c.den());
    const IntLaurent2 c = common_multiple(dens);

    std::map<std::int64_t, IntLaurent2> coeffs;
    for (const auto& [d, x] : p.coeffs())
        coeffs.emplace(d, x.is_polynomial() ? x.num() * c : x.num() * poly_exact_div(c, x.den()));

    // Drop the integer content, and the monomial part of a monomial leading coefficient;
    // the top term of the leading coefficient ends up positive.
    BigInt g = 0;
    for (const auto& [d, x] : coeffs) g = boost::multiprecision::gcd(g, x.content());
    Mono shift{0, 0};
    if (g == 0) g = 1;
    if (!coeffs.empty()) {
        const IntLaurent2& lead = coeffs.rbegin()->second;
        if (lead.is_monomial()) shift = lead.terms()[0].first;
        if (lead.terms().back().second < 0) g = -g;
    }

    Cleared out;
    for (auto& [d, x] : coeffs)
        out.pc += SkewOperator::monomial(d, RationalTM(x.divided_exact(g).shifted(-shift.t, -shift.m)));
    out.c = RationalTM(c, IntLaurent2::monomial(shift.t, shift.m, g));
    return out;
}

AnnihilationReport check_annihilation_cleared(const SkewOperator& pc, const DiscreteSequence& f, std::int64_t n_lo,
                                              std::int64_t n_hi) {
    AnnihilationReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        ProductAccumulator acc;
        for (const auto& [i, c] : pc.coeffs()) acc.add_product(c.num().substitute_M(n), f.dense(n + i));
        IntLaurent1 r = acc.result();
        ++rep.n_checked;
        if (!r.is_zero()) {
            rep.pass = false;
            rep.first_failure = n;
            rep.residue = std::move(r);
            break;
        }
    }
    return rep;
}

AnnihilationReport check_annihilation(const SkewOperator& p, const DiscreteSequence& f, std::int64_t n_lo,
                                      std::int64_t n_hi) {
    return check_annihilation_cleared(clear_denominators(p).pc, f, n_lo, n_hi);
}

}  // namespace ajcable
