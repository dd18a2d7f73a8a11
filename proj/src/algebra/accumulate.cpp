#include "ajcable/accumulate.hpp"

#include "ajcable/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace ajcable {

namespace {

constexpr std::int64_t kLane = std::int64_t{1} << 31;
constexpr long double kBoundLimit = 4.0e18L;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

DenseLaurent DenseLaurent::from(const IntLaurent1& f) {
    DenseLaurent d;
    d.exact = f;
    if (f.is_zero()) return d;
    d.base = f.low();
    std::int64_t g = 0;
    for (const auto& [e, c] : f.terms()) g = std::gcd(g, e - d.base);
    d.stride = g == 0 ? 1 : g;
    d.fast = true;
    for (const auto& [e, c] : f.terms()) {
        if (c >= kLane || c <= -kLane) {
            d.fast = false;
            break;
        }
    }
    if (!d.fast) return d;
    const std::size_t len = static_cast<std::size_t>((f.high() - d.base) / d.stride + 1);
    // Too sparse on its own lattice for a dense sweep to pay off.
    if (len > 16 * f.size() + 64) {
        d.fast = false;
        return d;
    }
    d.coeffs.assign(len, 0);
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t v = c.convert_to<std::int64_t>();
        d.coeffs[static_cast<std::size_t>((e - d.base) / d.stride)] = v;
        d.max_abs = std::max(d.max_abs, v < 0 ? -v : v);
    }
    return d;
}

ProductAccumulator::Plane& ProductAccumulator::plane_for(std::int64_t stride, std::int64_t first_exp,
                                                         std::size_t len) {
    const std::int64_t last_exp = first_exp + stride * static_cast<std::int64_t>(len - 1);
    Plane* pl = nullptr;
    for (auto& cand : planes_) {
        if (cand.stride == stride && floor_mod(first_exp - cand.origin, stride) == 0) {
            pl = &cand;
            break;
        }
    }
    if (pl == nullptr) {
        planes_.push_back(Plane{stride, first_exp, std::vector<std::int64_t>(len, 0)});
        return planes_.back();
    }
    // Grow to cover [first_exp, last_exp] with some slack on the growing side.
    const std::int64_t cur_last = pl->origin + stride * static_cast<std::int64_t>(pl->data.size()) - stride;
    if (first_exp < pl->origin) {
        const std::int64_t need = (pl->origin - first_exp) / stride;
        const std::int64_t extra = std::max<std::int64_t>(need, static_cast<std::int64_t>(pl->data.size() / 2));
        std::vector<std::int64_t> grown(pl->data.size() + static_cast<std::size_t>(extra), 0);
        std::copy(pl->data.begin(), pl->data.end(), grown.begin() + extra);
        pl->data.swap(grown);
        pl->origin -= extra * stride;
    }
    if (last_exp > cur_last) {
        const std::int64_t need = (last_exp - cur_last) / stride;
        const std::int64_t extra = std::max<std::int64_t>(need, static_cast<std::int64_t>(pl->data.size() / 2));
        pl->data.resize(pl->data.size() + static_cast<std::size_t>(extra), 0);
    }
    return *pl;
}

void ProductAccumulator::flush(Plane& pl) {
    std::vector<IntLaurent1::Term> terms;
    for (std::size_t i = 0; i < pl.data.size(); ++i) {
        if (pl.data[i] != 0) {
            terms.emplace_back(pl.origin + pl.stride * static_cast<std::int64_t>(i), BigInt(pl.data[i]));
            pl.data[i] = 0;
        }
    }
    exact_ += IntLaurent1::from_sorted(std::move(terms));
    pl.bound = 0;
}

void ProductAccumulator::add_product(const IntLaurent1& sparse, const DenseLaurent& dense) {
    if (sparse.is_zero() || dense.exact.is_zero()) return;
    if (!dense.fast) {
        exact_ += sparse * dense.exact;
        return;
    }
    const std::size_t len = dense.coeffs.size();
    for (const auto& [e, c] : sparse.terms()) {
        if (c >= kLane || c <= -kLane) {
            exact_ += IntLaurent1::monomial(e, c) * dense.exact;
            continue;
        }
        const std::int64_t cv = c.convert_to<std::int64_t>();
        const std::int64_t first = e + dense.base;
        Plane& pl = plane_for(dense.stride, first, len);
        const long double add = static_cast<long double>(cv < 0 ? -cv : cv) * dense.max_abs;
        if (pl.bound + add > kBoundLimit) flush(pl);
        pl.bound += add;
        const std::size_t off = static_cast<std::size_t>((first - pl.origin) / pl.stride);
        kernels::axpy_i64(pl.data.data() + off, dense.coeffs.data(), len, cv);
    }
}

IntLaurent1 ProductAccumulator::result() {
    for (auto& pl : planes_) flush(pl);
    return exact_;
}

}  // namespace ajcable
