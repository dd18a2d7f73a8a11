#include "ajcable/degrees.hpp"

#include "ajcable/errors.hpp"

namespace ajcable {

namespace {

// (1 - (-1)^k) / 2, taken literally.
std::int64_t alt(std::int64_t k) { return k % 2 == 0 ? 0 : 1; }

void check_n(std::int64_t n) {
    if (n < 1) throw BadParams("degree predictions need n >= 1");
}

void add_rows(DegreeAudit& out, const char* knot, std::int64_t n, const DegreePrediction& pr, const IntLaurent1& f) {
    const DegreeBounds b = degree_bounds(f);
    auto side = [&](const char* name, const std::optional<std::int64_t>& want, std::int64_t got) {
        if (!want) {
            ++out.unchecked_sides;
            return;
        }
        out.rows.push_back({knot, n, name, *want, got, *want == got});
        if (*want != got) out.pass = false;
    };
    side("lowest", pr.lowest, b.lowest);
    side("highest", pr.highest, b.highest);
}

}  // namespace

DegreePrediction predicted_torus_degrees(std::int64_t p, std::int64_t q, std::int64_t n) {
    validate_torus(p, q);
    check_n(n);
    const std::int64_t pq = p * q;
    if (p > q) return {-pq * n * n + pq + alt(n - 1) * (p - 2) * (q - 2), 2 * (p + q - pq) * n + 2 * (pq - p - q)};
    return {2 * (p - q - pq) * n + 2 * (pq - p + q), -pq * n * n + pq + alt(n - 1) * (p + 2) * (q - 2)};
}

DegreePrediction predicted_cable_degrees(const CablingParams& c, std::int64_t n) {
    c.validate();
    check_n(n);
    const std::int64_t p = c.p, q = c.q, r = c.r, s = c.s, pq = p * q, pqs = pq * s, rs = r * s;
    const std::int64_t quad = -pqs * s * n * n + (2 * pqs * s - 2 * pqs + 2 * r - 2 * rs) * n + 2 * rs - 2 * r + 2 * pqs -
                              pqs * s;
    const std::int64_t base = -rs * n * n + rs;
    DegreePrediction out;
    if (p > q) {
        if (r < pqs) out.lowest = quad + alt((n - 1) * s) * (p - 2) * (q - 2);
        else out.lowest = base + alt(n - 1) * (s - 2) * (r - pqs) + alt((n - 1) * s) * (p - 2) * (q - 2);
        if (r < 0) out.highest = base + alt(n - 1) * (s - 2) * (r - 2 * pq + 2 * p + 2 * q);
    } else {
        if (r > pqs) out.highest = quad + alt((n - 1) * s) * (p + 2) * (q - 2);
        else out.highest = base + alt(n - 1) * (s - 2) * (r - pqs) + alt((n - 1) * s) * (p + 2) * (q - 2);
        if (r > 0) out.lowest = base + alt(n - 1) * (s - 2) * (r - 2 * pq + 2 * p - 2 * q);
    }
    return out;
}

DegreeAudit audit_torus_degrees(std::int64_t p, std::int64_t q, std::int64_t n_max) {
    validate_torus(p, q);
    DegreeAudit out;
    out.params = {p, q, 0, 0};
    const DiscreteSequence jt = torus_sequence(p, q);
    for (std::int64_t n = 2; n <= n_max; ++n) add_rows(out, "torus", n, predicted_torus_degrees(p, q, n), jt(n));
    return out;
}

DegreeAudit audit_degrees(const CablingParams& c, const DiscreteSequence& cable, std::int64_t n_max) {
    c.validate();
    if (n_max < 2) throw BadParams("audit needs n_max >= 2");
    DegreeAudit out = audit_torus_degrees(c.p, c.q, n_max);
    out.params = c;
    for (std::int64_t n = 2; n <= n_max; ++n) add_rows(out, "cable", n, predicted_cable_degrees(c, n), cable(n));
    return out;
}

DegreeAudit audit_degrees(const CablingParams& c, std::int64_t n_max) {
    return audit_degrees(c, make_cable_sequence(c), n_max);
}

}  // namespace ajcable
