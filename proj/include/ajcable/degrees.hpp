#pragma once

#include "ajcable/jones.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ajcable {

struct DegreePrediction {
    std::optional<std::int64_t> lowest;
    std::optional<std::int64_t> highest;
};

DegreePrediction predicted_torus_degrees(std::int64_t p, std::int64_t q, std::int64_t n);
// Sides without a formula for the sign of r are left empty.
DegreePrediction predicted_cable_degrees(const CablingParams& c, std::int64_t n);

struct DegreeRow {
    std::string knot;  // "torus" or "cable"
    std::int64_t n = 0;
    std::string side;  // "lowest" or "highest"
    std::int64_t predicted = 0;
    std::int64_t actual = 0;
    bool match = false;
};

struct DegreeAudit {
    CablingParams params;
    std::vector<DegreeRow> rows;
    std::int64_t unchecked_sides = 0;
    bool pass = true;
};

// Torus and cable rows for n in [2, n_max].
DegreeAudit audit_degrees(const CablingParams& c, std::int64_t n_max);
DegreeAudit audit_degrees(const CablingParams& c, const DiscreteSequence& cable, std::int64_t n_max);
// Torus rows only; params.r and params.s are zero.
DegreeAudit audit_torus_degrees(std::int64_t p, std::int64_t q, std::int64_t n_max);

}  // namespace ajcable
