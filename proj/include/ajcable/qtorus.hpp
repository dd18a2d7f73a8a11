#pragma once

// Skew Laurent polynomials in L over Q(t,M) with L*f(t,M) = f(t,t^2 M)*L,
// and their action on sequences n -> Z[t^±1]: (M f)(n) = t^{2n} f(n),
// (L f)(n) = f(n+1).

#include "ajcable/accumulate.hpp"
#include "ajcable/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace ajcable {

class SkewOperator {
public:
    using Coeffs = std::map<std::int64_t, RationalTM>;

    SkewOperator() = default;
    static SkewOperator monomial(std::int64_t d, const RationalTM& c);
    static SkewOperator constant(const RationalTM& c) { return monomial(0, c); }
    static SkewOperator L(std::int64_t d = 1) { return monomial(d, RationalTM(IntLaurent2(1))); }

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t min_degree() const;
    std::int64_t max_degree() const;
    RationalTM coeff(std::int64_t d) const;
    bool has_polynomial_coeffs() const;

    SkewOperator& operator+=(const SkewOperator& o);
    SkewOperator& operator-=(const SkewOperator& o);
    friend SkewOperator operator+(SkewOperator a, const SkewOperator& b) { return a += b; }
    friend SkewOperator operator-(SkewOperator a, const SkewOperator& b) { return a -= b; }
    friend SkewOperator operator*(const SkewOperator& a, const SkewOperator& b);
    friend bool operator==(const SkewOperator&, const SkewOperator&) = default;

private:
    Coeffs coeffs_;
};

SkewOperator skew_multiply(const SkewOperator& p, const SkewOperator& q);

// "(coef)*L^d" terms in ascending d joined by " + ".
std::string to_text(const SkewOperator& p);

// A memoized function Z -> Z[t^±1]. Copies share one cache; concurrent
// evaluation may compute a value twice but stores it once.
class DiscreteSequence {
public:
    using Fn = std::function<IntLaurent1(std::int64_t)>;

    DiscreteSequence() = default;
    // With odd = true, values at n <= 0 come from f(-n) = -f(n) and f(0) = 0.
    explicit DiscreteSequence(Fn fn, bool odd = false);

    const IntLaurent1& operator()(std::int64_t n) const;
    const DenseLaurent& dense(std::int64_t n) const;
    bool odd() const;

private:
    struct State;
    std::shared_ptr<State> st_;
};

// Sum_i substitute_M(P_i, n) * f(n+i). Throws DenominatorVanishes(n) when a
// coefficient denominator specializes to zero, NotDivisible when the sum is
// not a Laurent polynomial.
IntLaurent1 apply_operator(const SkewOperator& p, const DiscreteSequence& f, std::int64_t n);

struct Cleared {
    SkewOperator pc;  // polynomial coefficients, pc = c * p
    RationalTM c;
};
Cleared clear_denominators(const SkewOperator& p);

struct AnnihilationReport {
    bool pass = true;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::int64_t n_checked = 0;
    std::optional<std::int64_t> first_failure;
    IntLaurent1 residue;
};

AnnihilationReport check_annihilation(const SkewOperator& p, const DiscreteSequence& f, std::int64_t n_lo,
                                      std::int64_t n_hi);
// Same check for an operator whose coefficients are already polynomials.
AnnihilationReport check_annihilation_cleared(const SkewOperator& pc, const DiscreteSequence& f, std::int64_t n_lo,
                                              std::int64_t n_hi);

}  // namespace ajcable
