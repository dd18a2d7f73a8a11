#pragma once

// Parameter grids, per-tuple reports and the command-line front end.

#include "ajcable/degrees.hpp"
#include "ajcable/minimality.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ajcable {

// {(3,2),(5,2),(5,3),(7,3),(-3,2),(-5,3)} x s in 2..5 x r in {-1, -7, pqs+1};
// for p < 0 also r in {1, 7, pqs-1}, the theorem-applicable mirror.
std::vector<CablingParams> default_grid();
// One "p q r s" per line; '#' starts a comment. Throws BadParams naming the line.
std::vector<CablingParams> parse_grid(std::string_view text);
std::vector<CablingParams> load_grid(const std::string& path);
std::string grid_text(const std::vector<CablingParams>& grid);

// AJCABLE_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();
// Calls fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

struct TupleRecord {
    CablingParams params;
    CaseTag case_tag{};
    std::int64_t L_degree = 0;
    bool theorem_applies = false;
    bool annihilates = false;
    std::int64_t n_checked = 0;
    std::string b_at_minus1;
    bool aj_match = false;
    bool determinant_ok = false;
    bool identities_ok = false;
    std::int64_t identities_checked = 0;
    bool relations_ok = false;
    bool degrees_ok = false;
    std::optional<SearchReport> minimality;
    std::vector<std::string> failures;

    // Annihilation only when the theorem does not apply.
    bool pass() const;
};

struct VerifyOptions {
    std::int64_t n_max = 12;
    bool minimality = true;  // only run for theorem-applicable tuples
};

TupleRecord verify_tuple(const CablingParams& c, const VerifyOptions& opt);

// Exit codes: 0 all checks pass, 2 a check failed, 1 usage or parameter error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ajcable
