#include "ajcable/minimality.hpp"

#include "ajcable/errors.hpp"
#include "ajcable/kernels.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace ajcable {

namespace {

using boost::multiprecision::cpp_rational;

constexpr std::uint32_t kPrime = 2147483647u;
// Above this many unknowns a rank-deficient system is reported without an exact solve.
constexpr std::int64_t kExactLimit = 900;

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kPrime);
}

std::uint32_t powmod(std::uint32_t a, std::int64_t e) {
    if (e < 0) return powmod(powmod(a, kPrime - 2), -e);
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t reduce(const BigInt& c) {
    BigInt r = c % kPrime;
    if (r < 0) r += kPrime;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t eval_mod(const IntLaurent1& f, std::uint32_t z) {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : f.terms()) acc = (acc + static_cast<std::uint64_t>(reduce(c)) * powmod(z, e)) % kPrime;
    return static_cast<std::uint32_t>(acc);
}

// Row echelon form mod p, built one row at a time.
class ModEchelon {
public:
    explicit ModEchelon(std::size_t cols) : cols_(cols), pivot_(cols) {}

    // Returns true and keeps the row if it is independent of the rows so far.
    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] == 0) continue;
            if (!pivot_[j].empty()) {
                kernels::axpy_mod(v.data() + j, pivot_[j].data() + j, cols_ - j, kPrime - v[j], kPrime);
                continue;
            }
            const std::uint32_t inv = powmod(v[j], kPrime - 2);
            for (std::size_t k = j; k < cols_; ++k) v[k] = mulmod(v[k], inv);
            pivot_[j] = std::move(v);
            ++rank_;
            return true;
        }
        return false;
    }
    std::int64_t rank() const { return rank_; }

private:
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> pivot_;
    std::int64_t rank_ = 0;
};

struct Layout {
    std::int64_t d, step, K, Ms, nt, nm, cols;
    std::vector<Mono> centers;

    Layout(const SearchBounds& b, std::int64_t step_)
        : d(b.L_degree), step(step_), K(b.t_span / step_), Ms(b.M_span), nt(2 * K + 1), nm(2 * Ms + 1),
          cols((d + 1) * nt * nm), centers(b.centers) {
        centers.resize(static_cast<std::size_t>(d + 1));
    }
    std::int64_t col(std::int64_t i, std::int64_t k, std::int64_t m) const { return (i * nt + (k + K)) * nm + (m + Ms); }
    std::int64_t t_exp(std::int64_t i, std::int64_t k) const { return centers[i].t + step * k; }
    std::int64_t m_exp(std::int64_t i, std::int64_t m) const { return centers[i].m + m; }
    std::int64_t shift(std::int64_t i, std::int64_t k, std::int64_t m, std::int64_t n) const {
        return t_exp(i, k) + 2 * n * m_exp(i, m);
    }
};

void check_bounds(const SearchBounds& b) {
    if (b.L_degree < 1) throw BadParams("search needs L-degree >= 1");
    if (b.t_span < 0 || b.M_span < 0) throw BadParams("spans must be non-negative");
    if (b.n_lo > b.n_hi) throw BadParams("empty n range");
}

// Exponent step of the sequence over the range the search reads.
std::int64_t exponent_step(const DiscreteSequence& f, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t n = lo; n <= hi; ++n)
        for (const auto& [e, c] : f(n).terms())
            if (e % 2 != 0) return 1;
    return 2;
}

std::int64_t count_equations(const DiscreteSequence& f, const Layout& L, std::int64_t n_lo, std::int64_t n_hi) {
    std::int64_t total = 0;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        std::int64_t lo = INT64_MAX, hi = INT64_MIN;
        for (std::int64_t i = 0; i <= L.d; ++i) {
            const IntLaurent1& v = f(n + i);
            if (v.is_zero()) continue;
            for (std::int64_t k : {-L.K, L.K})
                for (std::int64_t m : {-L.Ms, L.Ms}) {
                    const std::int64_t s = L.shift(i, k, m, n);
                    lo = std::min(lo, v.low() + s);
                    hi = std::max(hi, v.high() + s);
                }
        }
        if (lo <= hi) total += (hi - lo) / L.step + 1;
    }
    return total;
}

std::vector<std::uint32_t> evaluation_row(const DiscreteSequence& f, const Layout& L, std::int64_t n, std::uint32_t z) {
    std::vector<std::uint32_t> row(static_cast<std::size_t>(L.cols));
    const std::uint32_t zt = powmod(z, L.step), zm = powmod(z, 2 * n);
    for (std::int64_t i = 0; i <= L.d; ++i) {
        std::uint32_t base = mulmod(eval_mod(f(n + i), z), powmod(z, L.shift(i, -L.K, -L.Ms, n)));
        for (std::int64_t k = -L.K; k <= L.K; ++k, base = mulmod(base, zt)) {
            std::uint32_t v = base;
            for (std::int64_t m = -L.Ms; m <= L.Ms; ++m, v = mulmod(v, zm)) row[L.col(i, k, m)] = v;
        }
    }
    return row;
}

// Fraction-free echelon form, then one nullspace vector with the last free column set to 1.
std::optional<std::vector<BigInt>> exact_null_vector(std::vector<std::vector<BigInt>> A, std::size_t cols) {
    const std::size_t r = A.size();
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && A[piv][col] == 0) ++piv;
        if (piv == r) continue;
        std::swap(A[piv], A[row]);
        for (std::size_t i = row + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) A[i][j] = (A[row][col] * A[i][j] - A[i][col] * A[row][j]) / prev;
            A[i][col] = 0;
        }
        prev = A[row][col];
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::optional<std::size_t> free_col;
    for (std::size_t c = cols; c-- > 0;)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (!free_col) return std::nullopt;

    std::vector<cpp_rational> x(cols, 0);
    x[*free_col] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        cpp_rational sum = 0;
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (x[j] != 0 && A[k][j] != 0) sum += cpp_rational(A[k][j]) * x[j];
        x[pc] = -sum / cpp_rational(A[k][pc]);
    }
    BigInt den = 1;
    for (const auto& v : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<BigInt> out(cols);
    BigInt g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        out[j] = boost::multiprecision::numerator(cpp_rational(x[j] * den));
        g = boost::multiprecision::gcd(g, out[j]);
    }
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

SkewOperator normalized_operator(const std::vector<BigInt>& x, const Layout& L) {
    std::vector<IntLaurent2> D(static_cast<std::size_t>(L.d + 1));
    for (std::int64_t i = 0; i <= L.d; ++i) {
        std::vector<IntLaurent2::Term> terms;
        for (std::int64_t k = -L.K; k <= L.K; ++k)
            for (std::int64_t m = -L.Ms; m <= L.Ms; ++m) {
                const BigInt& c = x[L.col(i, k, m)];
                if (c != 0) terms.emplace_back(Mono{L.t_exp(i, k), L.m_exp(i, m)}, c);
            }
        D[i] = IntLaurent2::from_terms(std::move(terms));
    }
    std::int64_t top = L.d;
    while (top > 0 && D[top].is_zero()) --top;
    const auto& [mono, lead] = D[top].terms().front();
    const IntLaurent2 unit = IntLaurent2::monomial(-mono.t, -mono.m, lead < 0 ? -1 : 1);
    SkewOperator out;
    for (std::int64_t i = 0; i <= L.d; ++i)
        if (!D[i].is_zero()) out += SkewOperator::monomial(i, RationalTM(unit * D[i]));
    return out;
}

}  // namespace

std::string verdict_name(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::none_within_bounds: return "no annihilator within bounds";
        case SearchVerdict::found: return "found";
        case SearchVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

SearchReport search_sequence(const DiscreteSequence& f, const SearchBounds& bounds) {
    check_bounds(bounds);
    SearchReport rep;
    rep.bounds = bounds;
    const std::int64_t step = exponent_step(f, bounds.n_lo, bounds.n_hi + bounds.L_degree);
    for (const Mono& c : bounds.centers)
        if (step == 2 && c.t % 2 != 0) throw BadParams("t-centers must be even for an even sequence");
    const Layout L(bounds, step);
    rep.unknowns = L.cols;
    rep.equations = count_equations(f, L, bounds.n_lo, bounds.n_hi);
    if (rep.equations < 2 * rep.unknowns)
        throw SystemTooSmall(static_cast<std::size_t>(rep.equations), static_cast<std::size_t>(rep.unknowns));

    // Each evaluation row is a combination of the integer rows of one n, so full rank here is full rank over Q.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(2, kPrime - 2);
    ModEchelon ech(static_cast<std::size_t>(L.cols));
    for (std::int64_t n = bounds.n_lo; n <= bounds.n_hi && ech.rank() < L.cols; ++n) {
        int misses = 0;
        while (misses < 2 && ech.rank() < L.cols) {
            if (ech.insert(evaluation_row(f, L, n, pick(rng)))) misses = 0;
            else ++misses;
        }
    }
    rep.rank = ech.rank();
    rep.nullity = L.cols - rep.rank;
    if (rep.nullity == 0) {
        rep.verdict = SearchVerdict::none_within_bounds;
        return rep;
    }
    if (L.cols > kExactLimit) {
        rep.note = "rank deficient mod p; system too large for the exact solve";
        return rep;
    }

    // Exact phase: integer rows that are independent mod p.
    ModEchelon sel(static_cast<std::size_t>(L.cols));
    std::vector<std::vector<BigInt>> rows;
    for (std::int64_t n = bounds.n_lo; n <= bounds.n_hi && sel.rank() < L.cols; ++n) {
        std::map<std::int64_t, std::vector<BigInt>> by_e;
        for (std::int64_t i = 0; i <= L.d; ++i)
            for (std::int64_t k = -L.K; k <= L.K; ++k)
                for (std::int64_t m = -L.Ms; m <= L.Ms; ++m) {
                    const std::int64_t s = L.shift(i, k, m, n), c = L.col(i, k, m);
                    for (const auto& [e, v] : f(n + i).terms()) {
                        auto& row = by_e[e + s];
                        if (row.empty()) row.assign(static_cast<std::size_t>(L.cols), 0);
                        row[c] = v;
                    }
                }
        for (auto& [e, row] : by_e) {
            std::vector<std::uint32_t> mod(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) mod[j] = reduce(row[j]);
            if (sel.insert(std::move(mod))) rows.push_back(std::move(row));
            if (sel.rank() == L.cols) break;
        }
    }
    rep.rank = sel.rank();
    rep.nullity = L.cols - rep.rank;
    if (rep.nullity == 0) {
        rep.verdict = SearchVerdict::none_within_bounds;
        return rep;
    }
    const auto x = exact_null_vector(std::move(rows), static_cast<std::size_t>(L.cols));
    if (!x) return rep;
    SkewOperator op = normalized_operator(*x, L);
    const std::int64_t wider = bounds.n_hi + std::max<std::int64_t>(6, (bounds.n_hi - bounds.n_lo) / 2);
    if (check_annihilation(op, f, bounds.n_lo, wider).pass) {
        rep.verdict = SearchVerdict::found;
    } else {
        rep.note = "solution does not survive the wider range";
    }
    rep.op = std::move(op);
    return rep;
}

SearchReport search_report(const CablingParams& c, const SearchBounds& bounds) {
    c.validate();
    return search_sequence(make_cable_sequence(c), bounds);
}

std::optional<SkewOperator> search_bounded_annihilator(const CablingParams& c, const SearchBounds& bounds) {
    SearchReport rep = search_report(c, bounds);
    if (rep.verdict == SearchVerdict::found) return rep.op;
    return std::nullopt;
}

SearchBounds default_bounds(const AnnihilatorBundle& bundle, std::int64_t L_degree, std::int64_t unknown_budget) {
    const SkewOperator pc = clear_denominators(bundle.P).pc;
    std::int64_t wt = 0, wm = 0;
    std::vector<Mono> mids;
    for (std::int64_t i = 0; i <= pc.max_degree(); ++i) {
        const IntLaurent2 D = pc.coeff(i).num();
        if (D.is_zero()) {
            mids.push_back(mids.empty() ? Mono{} : mids.back());
            continue;
        }
        const Mono lo = D.min_exponents(), hi = D.max_exponents();
        wt = std::max(wt, hi.t - lo.t);
        wm = std::max(wm, hi.m - lo.m);
        std::int64_t mt = (lo.t + hi.t) / 2;
        if (mt % 2 != 0) mt -= 1;
        mids.push_back(Mono{mt, (lo.m + hi.m) / 2});
    }
    SearchBounds b;
    b.L_degree = L_degree;
    b.t_span = wt;
    b.M_span = wm;
    auto unknowns = [&] { return (L_degree + 1) * (2 * (b.t_span / 2) + 1) * (2 * b.M_span + 1); };
    while (unknowns() > unknown_budget && (b.t_span > 0 || b.M_span > 0)) {
        b.t_span = std::min(b.t_span - (b.t_span > 0 ? 2 : 0), b.t_span * 9 / 10);
        b.M_span = std::min(b.M_span - (b.M_span > 0 ? 1 : 0), b.M_span * 9 / 10);
        b.t_span = std::max<std::int64_t>(b.t_span, 0);
        b.M_span = std::max<std::int64_t>(b.M_span, 0);
    }
    mids.resize(static_cast<std::size_t>(L_degree + 1), mids.empty() ? Mono{} : mids.back());
    b.centers = mids;
    b.n_lo = 1;
    b.n_hi = b.n_lo + std::max<std::int64_t>(13, 2 * b.M_span + 4);
    return b;
}

SearchReport minimality_evidence(const AnnihilatorBundle& bundle, const DiscreteSequence& cable) {
    SearchBounds b = default_bounds(bundle, bundle.P.max_degree() - 1);
    for (;;) {
        try {
            return search_sequence(cable, b);
        } catch (const SystemTooSmall&) {
            b.n_hi += 4;
        }
    }
}

SearchReport minimality_evidence(const CablingParams& c) {
    return minimality_evidence(build_annihilator(c), make_cable_sequence(c));
}

}  // namespace ajcable
