#pragma once

// Bounded search for annihilators of lower L-degree.
//
// Unknowns are the integer coefficients of D_0..D_d on a box of exponents:
// t in center_t + [-t_span, t_span] (even exponents only when the sequence
// has only even exponents, which loses nothing since M = t^{2n} preserves
// parity), M in center_m + [-M_span, M_span]. A "none" verdict means the
// system has full column rank modulo a prime, hence over Q; it says nothing
// outside the box.

#include "ajcable/aj.hpp"

#include <optional>
#include <string>

namespace ajcable {

struct SearchBounds {
    std::int64_t L_degree = 1;
    std::int64_t t_span = 0;
    std::int64_t M_span = 0;
    std::int64_t n_lo = 1;
    std::int64_t n_hi = 10;
    std::vector<Mono> centers;  // per L-exponent; missing entries are (0, 0)
};

enum class SearchVerdict { none_within_bounds, found, inconclusive };
std::string verdict_name(SearchVerdict v);

struct SearchReport {
    SearchBounds bounds;
    std::int64_t unknowns = 0;
    std::int64_t equations = 0;
    std::int64_t rank = 0;
    std::int64_t nullity = 0;
    SearchVerdict verdict = SearchVerdict::inconclusive;
    std::optional<SkewOperator> op;  // normalized: primitive, top coefficient starts at t^0 M^0
    std::string note;
};

// Throws SystemTooSmall when the (n, t-exponent) equations number fewer than twice the unknowns.
SearchReport search_sequence(const DiscreteSequence& f, const SearchBounds& bounds);
SearchReport search_report(const CablingParams& c, const SearchBounds& bounds);
std::optional<SkewOperator> search_bounded_annihilator(const CablingParams& c, const SearchBounds& bounds);

inline constexpr std::int64_t kDefaultUnknownBudget = 1200;

// Box from the cleared annihilator's coefficient supports, doubled, then shrunk to the budget.
SearchBounds default_bounds(const AnnihilatorBundle& bundle, std::int64_t L_degree,
                            std::int64_t unknown_budget = kDefaultUnknownBudget);
// Search one L-degree below the constructed annihilator with default bounds.
SearchReport minimality_evidence(const CablingParams& c);
SearchReport minimality_evidence(const AnnihilatorBundle& bundle, const DiscreteSequence& cable);

}  // namespace ajcable
