#pragma once

// Exact sums of products sparse * dense of univariate Laurent polynomials,
// run on int64 lanes whenever a coefficient bound proves it safe and on
// BigInt otherwise.

#include "ajcable/laurent.hpp"

#include <vector>

namespace ajcable {

// Coefficients on the lattice base + stride*k.
struct DenseLaurent {
    std::int64_t base = 0;
    std::int64_t stride = 1;
    std::vector<std::int64_t> coeffs;
    std::int64_t max_abs = 0;
    bool fast = false;  // every coefficient fits in int32
    IntLaurent1 exact;

    static DenseLaurent from(const IntLaurent1& f);
};

class ProductAccumulator {
public:
    void add_product(const IntLaurent1& sparse, const DenseLaurent& dense);
    void add(const IntLaurent1& f) { exact_ += f; }
    IntLaurent1 result();

private:
    struct Plane {
        std::int64_t stride;
        std::int64_t origin;  // exponent of data[0]
        std::vector<std::int64_t> data;
        long double bound = 0;
    };

    Plane& plane_for(std::int64_t stride, std::int64_t first_exp, std::size_t len);
    void flush(Plane& pl);

    std::vector<Plane> planes_;
    IntLaurent1 exact_;
};

}  // namespace ajcable
