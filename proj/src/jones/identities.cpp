#include "ajcable/errors.hpp"
#include "ajcable/jones.hpp"

#include <functional>

namespace ajcable {

namespace {

IntLaurent1 mono(std::int64_t e, const BigInt& c = 1) { return IntLaurent1::monomial(e, c); }

// (t^{2e} - t^{-2e}) / (t^2 - t^-2), i.e. J_U(e).
IntLaurent1 qint(std::int64_t e) { return unknot_jones(e); }

// Returns lhs - rhs at n.
using Residue = std::function<IntLaurent1(std::int64_t)>;

Residue residue_fn(IdentityId id, const CablingParams& c, const DiscreteSequence& jc, std::int64_t m) {
    const std::int64_t p = c.p, q = c.q, r = c.r, s = c.s;
    const std::int64_t pq = p * q, pqs = pq * s, rs = r * s, ps = p * s;
    DiscreteSequence jt = torus_sequence(p, q);
    switch (id) {
        case IdentityId::TORUS_STEP:
            return [=](std::int64_t n) {
                return jt(n + 2) - mono(-4 * pq * (n + 1)) * jt(n) - mono(-2 * pq * (n + 1)) * delta_term(p, q, n);
            };
        case IdentityId::Q2_STEP:
            return [=](std::int64_t n) {
                return jt(n + 1) + mono(-(4 * n + 2) * p) * jt(n) - mono(-2 * p * n) * qint(2 * n + 1);
            };
        case IdentityId::CABLE_STEP:
            return [=](std::int64_t n) {
                const std::int64_t j = s * (n + 1) - 1;
                const IntLaurent1 coef =
                    mono(2 * (r - rs) * n - 2 * rs + 2 * r - 4 * pqs * (n + 1)) - mono(2 * (-r - rs) * n - 2 * rs - 2 * r);
                return jc(n + 2) - mono(-4 * rs * n - 4 * rs) * jc(n) - coef * jt(j) -
                       mono(2 * (r - rs) * n - 2 * rs + 2 * r - 2 * pqs * (n + 1)) * delta_term(p, q, j);
            };
        case IdentityId::PEEL:
            return [=](std::int64_t n) {
                IntLaurent1 rhs = mono(-4 * pq * m * (n + 1) + 4 * pq * m * (m + 1)) * jt(n - 2 * m);
                for (std::int64_t k = 1; k <= m; ++k)
                    rhs += mono((-4 * pq * k + 2 * pq) * n + 4 * pq * k * k - 4 * pq * k + 2 * pq) *
                           delta_term(p, q, n - 2 * k);
                return jt(n) - rhs;
            };
        case IdentityId::PEEL_S:
            return [=](std::int64_t n) {
                return jt(s * (n + 3) - 1) - mono(-4 * pqs * s * n - 8 * pqs * s + 4 * pqs) * jt(s * (n + 1) - 1) -
                       direct_sum(SumKind::S, p, q, s, n);
            };
        case IdentityId::Q2_PEEL:
            return [=](std::int64_t n) {
                IntLaurent1 rhs = mono((-4 * m * n + 2 * m * m) * p, m % 2 == 0 ? 1 : -1) * jt(n - m);
                for (std::int64_t k = 1; k <= m; ++k)
                    rhs += mono(-(4 * k - 2) * p * n + (2 * k * k - 2 * k + 2) * p, k % 2 == 1 ? 1 : -1) *
                           qint(2 * n + 1 - 2 * k);
                return jt(n) - rhs;
            };
        case IdentityId::Q2_PEEL_S:
            // The particular form, plus the check that the general sum at m = s,
            // index s(n+2)-1, is term for term U_n.
            return [=](std::int64_t n) {
                const std::int64_t big = s * (n + 2) - 1;
                const IntLaurent1 u = direct_sum(SumKind::U, p, q, s, n);
                IntLaurent1 general;
                for (std::int64_t k = 1; k <= s; ++k)
                    general += mono(-(4 * k - 2) * p * big + (2 * k * k - 2 * k + 2) * p, k % 2 == 1 ? 1 : -1) *
                               qint(2 * big + 1 - 2 * k);
                IntLaurent1 res = jt(big) + mono(-4 * ps * s * n + 4 * ps - 6 * ps * s) * jt(s * (n + 1) - 1) - u;
                return res.is_zero() ? general - u : res;
            };
        case IdentityId::HALF_PEEL:
            return [=](std::int64_t n) {
                return jt(s * (n + 2) - 1) - mono(-2 * pqs * s * n - 3 * pqs * s + 2 * pqs) * jt(s * (n + 1) - 1) -
                       direct_sum(SumKind::V, p, q, s, n);
            };
        case IdentityId::S2_STEP:
            return [=](std::int64_t n) {
                IntLaurent1 first = jc(n + 1) - mono(-2 * r * n) * jt(2 * n + 1) + mono(-4 * r * n - 2 * r) * jc(n);
                if (!first.is_zero()) return first;
                return jt(2 * n + 3) - mono(-8 * pq * (n + 1)) * jt(2 * n + 1) -
                       mono(-4 * pq * (n + 1)) * delta_term(p, q, 2 * n + 1);
            };
    }
    throw BadParams("unknown identity");
}

}  // namespace

std::string identity_name(IdentityId id, std::int64_t m) {
    switch (id) {
        case IdentityId::TORUS_STEP: return "TORUS_STEP";
        case IdentityId::Q2_STEP: return "Q2_STEP";
        case IdentityId::CABLE_STEP: return "CABLE_STEP";
        case IdentityId::PEEL: return "PEEL(" + std::to_string(m) + ")";
        case IdentityId::PEEL_S: return "PEEL_S";
        case IdentityId::Q2_PEEL: return "Q2_PEEL(" + std::to_string(m) + ")";
        case IdentityId::Q2_PEEL_S: return "Q2_PEEL_S";
        case IdentityId::HALF_PEEL: return "HALF_PEEL";
        case IdentityId::S2_STEP: return "S2_STEP";
    }
    return "?";
}

bool identity_applies(IdentityId id, const CablingParams& c) {
    switch (id) {
        case IdentityId::Q2_STEP:
        case IdentityId::Q2_PEEL: return c.q == 2;
        case IdentityId::Q2_PEEL_S: return c.q == 2 && c.s % 2 != 0;
        case IdentityId::HALF_PEEL: return c.s % 2 == 0;
        case IdentityId::S2_STEP: return c.s == 2;
        default: return true;
    }
}

IdentityReport verify_identity(IdentityId id, const CablingParams& c, const DiscreteSequence& cable,
                               std::int64_t n_lo, std::int64_t n_hi, std::int64_t m) {
    c.validate();
    if (!identity_applies(id, c)) throw BadParams(identity_name(id, m) + " does not apply to " + c.to_string());
    if ((id == IdentityId::PEEL || id == IdentityId::Q2_PEEL) && m < 1) throw BadParams("peel depth must be positive");
    IdentityReport rep;
    rep.name = identity_name(id, m);
    const Residue f = residue_fn(id, c, cable, m);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        IntLaurent1 res = f(n);
        ++rep.n_checked;
        if (!res.is_zero()) {
            rep.pass = false;
            rep.first_failure = n;
            rep.residue = std::move(res);
            break;
        }
    }
    return rep;
}

IdentityReport verify_identity(IdentityId id, const CablingParams& c, std::int64_t n_lo, std::int64_t n_hi,
                               std::int64_t m) {
    return verify_identity(id, c, make_cable_sequence(c), n_lo, n_hi, m);
}

std::vector<IdentityReport> verify_all_identities(const CablingParams& c, const DiscreteSequence& cable,
                                                  std::int64_t n_lo, std::int64_t n_hi) {
    std::vector<IdentityReport> out;
    for (IdentityId id : {IdentityId::TORUS_STEP, IdentityId::Q2_STEP, IdentityId::CABLE_STEP, IdentityId::PEEL,
                          IdentityId::PEEL_S, IdentityId::Q2_PEEL, IdentityId::Q2_PEEL_S, IdentityId::HALF_PEEL,
                          IdentityId::S2_STEP}) {
        if (!identity_applies(id, c)) continue;
        if (id == IdentityId::PEEL || id == IdentityId::Q2_PEEL)
            for (std::int64_t m = 1; m <= 4; ++m) out.push_back(verify_identity(id, c, cable, n_lo, n_hi, m));
        else
            out.push_back(verify_identity(id, c, cable, n_lo, n_hi));
    }
    return out;
}

}  // namespace ajcable
