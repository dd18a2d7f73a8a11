#pragma once

// Colored Jones functions of the unknot, (p,q)-torus knots and their
// (r,s)-cables, the auxiliary sums delta, S, U, V, and checks of the
// recurrence identities relating them.

#include "ajcable/qtorus.hpp"

#include <string>
#include <vector>

namespace ajcable {

struct CablingParams {
    std::int64_t p = 0, q = 0, r = 0, s = 0;

    // Throws BadParams unless gcd(p,q)=1, |p|>q>=2, gcd(r,s)=1, s>=2.
    void validate() const;
    // r is not strictly between 0 and pqs.
    bool theorem_applies() const;
    std::string to_string() const;
    friend auto operator<=>(const CablingParams&, const CablingParams&) = default;
};

// Throws BadParams unless gcd(p,q)=1 and |p|>q>=2.
void validate_torus(std::int64_t p, std::int64_t q);

IntLaurent1 unknot_jones(std::int64_t n);
// Direct evaluation of the torus-knot sum, odd extension for n <= 0.
IntLaurent1 torus_jones(std::int64_t p, std::int64_t q, std::int64_t n);
// Same values obtained by iterating the two-step torus recurrence from J(0)=0, J(1)=1.
IntLaurent1 torus_jones_by_recurrence(std::int64_t p, std::int64_t q, std::int64_t n);
IntLaurent1 cabled_jones(const CablingParams& c, std::int64_t n);

DiscreteSequence unknot_sequence();
// Shared, memoized per (p,q).
DiscreteSequence torus_sequence(std::int64_t p, std::int64_t q);
// A fresh memoized cable sequence backed by the shared torus sequence.
DiscreteSequence make_cable_sequence(const CablingParams& c);

IntLaurent1 delta_term(std::int64_t p, std::int64_t q, std::int64_t j);

// num(t, M) or num(t, M)/(t^2 - t^-2), read as a function of n through M = t^{2n}.
struct SymbolicSequence {
    IntLaurent2 num;
    bool needs_qint_div = true;

    IntLaurent1 realize(std::int64_t n) const;
    // The value as an element of Q(t, M).
    RationalTM as_rational() const;
};

// c * t^{alpha n + beta} as c * M^{alpha/2} t^beta; throws OddMCoefficient for odd alpha.
IntLaurent2 n_monomial(std::int64_t alpha, std::int64_t beta, const BigInt& c = 1);

// delta_{a n + b}
SymbolicSequence symbolic_delta(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b);

enum class SumKind { S, U, V };
SymbolicSequence symbolic_sum(SumKind kind, std::int64_t p, std::int64_t q, std::int64_t s);
// The same sums evaluated term by term at a concrete n.
IntLaurent1 direct_sum(SumKind kind, std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t n);

enum class IdentityId { TORUS_STEP, Q2_STEP, CABLE_STEP, PEEL, PEEL_S, Q2_PEEL, Q2_PEEL_S, HALF_PEEL, S2_STEP };

std::string identity_name(IdentityId id, std::int64_t m = 0);
// Whether the identity is stated for these parameters.
bool identity_applies(IdentityId id, const CablingParams& c);

struct IdentityReport {
    std::string name;
    bool pass = true;
    std::int64_t n_checked = 0;
    std::optional<std::int64_t> first_failure;
    IntLaurent1 residue;
};

// m is the peel depth for PEEL and Q2_PEEL and ignored otherwise.
IdentityReport verify_identity(IdentityId id, const CablingParams& c, std::int64_t n_lo, std::int64_t n_hi,
                               std::int64_t m = 0);
IdentityReport verify_identity(IdentityId id, const CablingParams& c, const DiscreteSequence& cable,
                               std::int64_t n_lo, std::int64_t n_hi, std::int64_t m = 0);

// Every applicable identity, with PEEL and Q2_PEEL at m = 1..4.
std::vector<IdentityReport> verify_all_identities(const CablingParams& c, const DiscreteSequence& cable,
                                                  std::int64_t n_lo, std::int64_t n_hi);

}  // namespace ajcable
