#include "ajcable/jones.hpp"

#include "ajcable/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace ajcable {

namespace {

IntLaurent1 mono(std::int64_t e, const BigInt& c = 1) { return IntLaurent1::monomial(e, c); }

// Appends the terms of c * t^shift * J_U(k) to out.
void push_unknot(std::vector<IntLaurent1::Term>& out, std::int64_t k, std::int64_t shift, int c) {
    if (k == 0) return;
    const int sign = k < 0 ? -c : c;
    const std::int64_t a = k < 0 ? -k : k;
    for (std::int64_t j = 0; j < a; ++j) out.emplace_back(shift + 2 * (a - 1) - 4 * j, sign);
}

}  // namespace

void validate_torus(std::int64_t p, std::int64_t q) {
    if (q < 2) throw BadParams("q must be at least 2");
    if ((p < 0 ? -p : p) <= q) throw BadParams("|p| must exceed q");
    if (std::gcd(p, q) != 1) throw BadParams("p and q must be coprime");
}

void CablingParams::validate() const {
    validate_torus(p, q);
    if (s < 2) throw BadParams("s must be at least 2");
    if (std::gcd(r, s) != 1) throw BadParams("r and s must be coprime");
}

bool CablingParams::theorem_applies() const {
    const std::int64_t pqs = p * q * s;
    return pqs > 0 ? (r <= 0 || r >= pqs) : (r >= 0 || r <= pqs);
}

std::string CablingParams::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

IntLaurent1 unknot_jones(std::int64_t n) {
    std::vector<IntLaurent1::Term> terms;
    push_unknot(terms, n, 0, 1);
    return IntLaurent1::from_terms(std::move(terms));
}

// J_T(n) = t^{-pq(n^2-1)} sum_{m = 1-n, 3-n, ..., n-1} t^{pqm^2+2pm} J_U(qm+1), with m = 2k.
IntLaurent1 torus_jones(std::int64_t p, std::int64_t q, std::int64_t n) {
    validate_torus(p, q);
    if (n == 0) return {};
    if (n < 0) return torus_jones(p, q, -n).negated();
    std::vector<IntLaurent1::Term> terms;
    const std::int64_t base = -p * q * (n * n - 1);
    for (std::int64_t m = 1 - n; m <= n - 1; m += 2) push_unknot(terms, q * m + 1, base + p * q * m * m + 2 * p * m, 1);
    return IntLaurent1::from_terms(std::move(terms));
}

IntLaurent1 delta_term(std::int64_t p, std::int64_t q, std::int64_t j) {
    const std::int64_t u = 2 * (p + q) * (j + 1), v = 2 * (q - p) * (j + 1);
    IntLaurent1 num = IntLaurent1::from_terms({{u + 2, 1}, {-u + 2, 1}, {v - 2, -1}, {-v - 2, -1}});
    return poly_exact_div(num, qint_den());
}

IntLaurent1 torus_jones_by_recurrence(std::int64_t p, std::int64_t q, std::int64_t n) {
    validate_torus(p, q);
    if (n < 0) return torus_jones_by_recurrence(p, q, -n).negated();
    // J(k+2) = t^{-4pq(k+1)} J(k) + t^{-2pq(k+1)} delta_k, starting from J(0) = 0, J(1) = 1.
    IntLaurent1 lo = n % 2 == 0 ? IntLaurent1{} : IntLaurent1(1);
    for (std::int64_t k = n % 2; k + 2 <= n; k += 2)
        lo = mono(-4 * p * q * (k + 1)) * lo + mono(-2 * p * q * (k + 1)) * delta_term(p, q, k);
    return lo;
}

DiscreteSequence unknot_sequence() {
    static const DiscreteSequence seq([](std::int64_t n) { return unknot_jones(n); }, true);
    return seq;
}

DiscreteSequence torus_sequence(std::int64_t p, std::int64_t q) {
    validate_torus(p, q);
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, std::int64_t>, DiscreteSequence> registry;
    std::lock_guard lk(mu);
    auto it = registry.find({p, q});
    if (it == registry.end())
        it = registry
                 .emplace(std::pair{p, q},
                          DiscreteSequence([p, q](std::int64_t n) { return torus_jones(p, q, n); }, true))
                 .first;
    return it->second;
}

// J_C(n) = t^{-rs(n^2-1)} sum_{m = 1-n, 3-n, ..., n-1} t^{rsm^2+2rm} J_T(sm+1).
DiscreteSequence make_cable_sequence(const CablingParams& c) {
    c.validate();
    DiscreteSequence jt = torus_sequence(c.p, c.q);
    return DiscreteSequence(
        [c, jt](std::int64_t n) {
            const std::int64_t rs = c.r * c.s;
            ProductAccumulator acc;
            for (std::int64_t m = 1 - n; m <= n - 1; m += 2)
                acc.add_product(mono(-rs * (n * n - 1) + rs * m * m + 2 * c.r * m), jt.dense(c.s * m + 1));
            return acc.result();
        },
        true);
}

IntLaurent1 cabled_jones(const CablingParams& c, std::int64_t n) {
    c.validate();
    static std::mutex mu;
    static std::map<CablingParams, DiscreteSequence> registry;
    DiscreteSequence seq;
    {
        std::lock_guard lk(mu);
        auto it = registry.find(c);
        if (it == registry.end()) it = registry.emplace(c, make_cable_sequence(c)).first;
        seq = it->second;
    }
    return seq(n);
}

IntLaurent1 SymbolicSequence::realize(std::int64_t n) const {
    IntLaurent1 v = num.substitute_M(n);
    return needs_qint_div ? poly_exact_div(v, qint_den()) : v;
}

RationalTM SymbolicSequence::as_rational() const {
    if (!needs_qint_div) return RationalTM(num);
    return RationalTM(num, IntLaurent2::in_t(qint_den()));
}

IntLaurent2 n_monomial(std::int64_t alpha, std::int64_t beta, const BigInt& c) {
    if (alpha % 2 != 0) throw OddMCoefficient();
    return IntLaurent2::monomial(beta, alpha / 2, c);
}

SymbolicSequence symbolic_delta(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b) {
    const std::int64_t u = p + q, v = q - p;
    IntLaurent2 num = n_monomial(2 * u * a, 2 * u * (b + 1) + 2) + n_monomial(-2 * u * a, -2 * u * (b + 1) + 2) -
                      n_monomial(2 * v * a, 2 * v * (b + 1) - 2) - n_monomial(-2 * v * a, -2 * v * (b + 1) - 2);
    return {std::move(num), true};
}

SymbolicSequence symbolic_sum(SumKind kind, std::int64_t p, std::int64_t q, std::int64_t s) {
    if (s < 1) throw BadParams("s must be positive");
    const std::int64_t pq = p * q, ps = p * s, pqs = pq * s;
    IntLaurent2 num;
    switch (kind) {
        case SumKind::S:
            for (std::int64_t k = 1; k <= s; ++k)
                num += n_monomial(2 * pqs - 4 * pqs * k, 4 * pq * k * k - 12 * pqs * k + 6 * pqs) *
                       symbolic_delta(p, q, s, 3 * s - 1 - 2 * k).num;
            break;
        case SumKind::V:
            if (s % 2 != 0) throw BadParams("V requires even s");
            for (std::int64_t k = 1; k <= s / 2; ++k)
                num += n_monomial(2 * pqs - 4 * pqs * k, 4 * pq * k * k - 8 * pqs * k + 4 * pqs) *
                       symbolic_delta(p, q, s, 2 * s - 1 - 2 * k).num;
            break;
        case SumKind::U:
            for (std::int64_t k = 1; k <= s; ++k) {
                const IntLaurent2 qi = n_monomial(4 * s, 8 * s - 2 - 4 * k) - n_monomial(-4 * s, -8 * s + 2 + 4 * k);
                num += n_monomial(2 * ps - 4 * ps * k, 2 * p * k * k - 8 * ps * k + 2 * p * k + 4 * ps,
                                  k % 2 == 1 ? 1 : -1) *
                       qi;
            }
            break;
    }
    return {std::move(num), true};
}

IntLaurent1 direct_sum(SumKind kind, std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t n) {
    if (s < 1) throw BadParams("s must be positive");
    const std::int64_t pq = p * q, ps = p * s, pqs = pq * s;
    IntLaurent1 out;
    switch (kind) {
        case SumKind::S:
            for (std::int64_t k = 1; k <= s; ++k)
                out += mono(-4 * pqs * k * n + 2 * pqs * n + 4 * pq * k * k - 12 * pqs * k + 6 * pqs) *
                       delta_term(p, q, s * (n + 3) - 1 - 2 * k);
            break;
        case SumKind::V:
            if (s % 2 != 0) throw BadParams("V requires even s");
            for (std::int64_t k = 1; k <= s / 2; ++k)
                out += mono(-4 * pqs * n * k + 2 * pqs * n + 4 * pq * k * k - 8 * pqs * k + 4 * pqs) *
                       delta_term(p, q, s * (n + 2) - 1 - 2 * k);
            break;
        case SumKind::U:
            for (std::int64_t k = 1; k <= s; ++k) {
                const std::int64_t e = 4 * s * n + 8 * s - 2 - 4 * k;
                const IntLaurent1 frac = poly_exact_div(mono(e) - mono(-e), qint_den());
                out += mono(2 * ps * n - 4 * ps * n * k + 2 * p * k * k - 8 * ps * k + 2 * p * k + 4 * ps,
                            k % 2 == 1 ? 1 : -1) *
                       frac;
            }
            break;
    }
    return out;
}

}  // namespace ajcable
