#include "ajcable/cli.hpp"

#include "ajcable/format.hpp"

namespace ajcable {

bool TupleRecord::pass() const {
    const bool built = L_degree == expected_l_degree(case_tag);
    if (!built || !annihilates) return false;
    if (!theorem_applies) return true;
    const bool minimal = !minimality || minimality->verdict == SearchVerdict::none_within_bounds;
    return aj_match && determinant_ok && identities_ok && relations_ok && degrees_ok && minimal;
}

TupleRecord verify_tuple(const CablingParams& c, const VerifyOptions& opt) {
    c.validate();
    TupleRecord rec;
    rec.params = c;
    rec.theorem_applies = c.theorem_applies();

    const AnnihilatorBundle bundle = build_annihilator(c);
    rec.case_tag = bundle.case_tag;
    rec.L_degree = bundle.P.max_degree();
    if (rec.L_degree != expected_l_degree(bundle.case_tag)) rec.failures.push_back("L-degree");

    const DiscreteSequence jc = make_cable_sequence(c);
    const AnnihilationReport ann = check_annihilation(bundle.P, jc, 1, opt.n_max);
    rec.annihilates = ann.pass;
    rec.n_checked = ann.n_checked;
    if (!ann.pass) rec.failures.push_back("annihilation at n=" + std::to_string(*ann.first_failure));

    rec.aj_match = compare_aj(bundle).pass;
    if (!rec.aj_match) rec.failures.push_back("aj");

    const DeterminantReport det = determinant_check(bundle);
    rec.b_at_minus1 = to_text(det.b_at_minus1);
    rec.determinant_ok = det.pass();
    if (!rec.determinant_ok) rec.failures.push_back("determinant");

    rec.identities_ok = true;
    for (const auto& id : verify_all_identities(c, jc, 1, opt.n_max)) {
        rec.identities_checked += id.n_checked;
        if (!id.pass) {
            rec.identities_ok = false;
            rec.failures.push_back("identity " + id.name);
        }
    }
    rec.relations_ok = true;
    for (const auto& rel : verify_case_relations(bundle, jc, 1, opt.n_max))
        if (!rel.pass) {
            rec.relations_ok = false;
            rec.failures.push_back("relation " + rel.name);
        }

    rec.degrees_ok = opt.n_max < 2 || audit_degrees(c, jc, opt.n_max).pass;
    if (!rec.degrees_ok) rec.failures.push_back("degrees");

    if (opt.minimality && rec.theorem_applies) {
        rec.minimality = minimality_evidence(bundle, jc);
        if (rec.minimality->verdict != SearchVerdict::none_within_bounds) rec.failures.push_back("minimality");
    }
    return rec;
}

}  // namespace ajcable
