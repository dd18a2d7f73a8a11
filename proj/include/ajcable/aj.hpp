#pragma once

// A-polynomials of cables over torus knots, the case-by-case annihilators of
// the cabled colored Jones function, and their comparison at t = -1.

#include "ajcable/jones.hpp"

#include <map>
#include <string>
#include <vector>

namespace ajcable {

// Polynomial in L with coefficients in Q(M); L and M commute.
class LPolynomialOverM {
public:
    LPolynomialOverM() = default;
    static LPolynomialOverM monomial(std::int64_t d, const RationalM& c);

    const std::map<std::int64_t, RationalM>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const;
    RationalM coeff(std::int64_t d) const;

    LPolynomialOverM& operator+=(const LPolynomialOverM& o);
    friend LPolynomialOverM operator+(LPolynomialOverM a, const LPolynomialOverM& b) { return a += b; }
    friend LPolynomialOverM operator-(LPolynomialOverM a, const LPolynomialOverM& b);
    friend LPolynomialOverM operator*(const LPolynomialOverM& a, const LPolynomialOverM& b);
    friend bool operator==(const LPolynomialOverM&, const LPolynomialOverM&) = default;

private:
    std::map<std::int64_t, RationalM> coeffs_;
};

std::string to_text(const LPolynomialOverM& f);

enum class CaseTag { S_ODD_QGT2, S_ODD_Q2, S_EVEN_GT2, S_EQ_2 };

std::string case_name(CaseTag c);
CaseTag case_of(const CablingParams& c);
std::int64_t expected_l_degree(CaseTag c);

LPolynomialOverM f_poly(std::int64_t p, std::int64_t q);
LPolynomialOverM g_poly(std::int64_t p, std::int64_t q);
// M -> M^k in every coefficient.
LPolynomialOverM m_power(const LPolynomialOverM& f, std::int64_t k);
LPolynomialOverM cabled_a_polynomial(const CablingParams& c);

struct AB {
    IntLaurent2 a;
    RationalTM b;
};
AB build_ab(const CablingParams& c);

struct AnnihilatorBundle {
    CablingParams params;
    CaseTag case_tag{};
    std::vector<SkewOperator> factors;  // left to right
    IntLaurent2 a;
    RationalTM b;
    SkewOperator P;
};

// Throws BZero when b vanishes at t = -1.
AnnihilatorBundle build_annihilator(const CablingParams& c);
LPolynomialOverM evaluate_annihilator_at_minus1(const AnnihilatorBundle& bundle);

struct AjReport {
    bool pass = false;
    bool degree_match = false;
    bool pattern_match = false;
    bool projective_match = false;
    RationalM ratio;  // P(-1) / A_C, from the leading coefficients
    LPolynomialOverM p_at_minus1;
    LPolynomialOverM a_poly;
};

AjReport compare_aj(const LPolynomialOverM& p_at_minus1, const LPolynomialOverM& a_poly);
AjReport compare_aj(const AnnihilatorBundle& bundle);
AjReport compare_aj(const CablingParams& c);

// The factored value of b at t = -1 for the case of c.
RationalM b_closed_form(const CablingParams& c);
// The factored determinant at t = -1; empty for s = 2, where no 2x2 system arises.
std::optional<RationalM> determinant_closed_form(const CablingParams& c);
// The usual factored product. For s even, s > 2 it lacks the
// factor 1/(1 - M^{-2pqs}) that the determinant carries; elsewhere it agrees.
std::optional<RationalM> printed_determinant_form(const CablingParams& c);

struct DeterminantReport {
    RationalM b_at_minus1;
    bool b_nonzero = false;
    bool b_matches = false;
    std::optional<RationalM> det_at_minus1;
    bool det_nonzero = false;
    bool det_matches = false;
    bool det_matches_printed = false;
    bool pass() const;
};

DeterminantReport determinant_check(const CablingParams& c);
DeterminantReport determinant_check(const AnnihilatorBundle& bundle);

// The pre-division relations the construction rests on, checked pointwise.
std::vector<IdentityReport> verify_case_relations(const AnnihilatorBundle& bundle, const DiscreteSequence& cable,
                                                  std::int64_t n_lo, std::int64_t n_hi);

}  // namespace ajcable
