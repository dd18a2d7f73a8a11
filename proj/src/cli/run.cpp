#include "ajcable/cli.hpp"

#include "ajcable/errors.hpp"
#include "ajcable/format.hpp"
#include "ajcable/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ajcable {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";
constexpr const char* kRangeWarning = "r strictly between 0 and pqs: theorem minimality claim not applicable";

struct Flags {
    std::int64_t p = 0, q = 0, r = 0, s = 0, n = 1;
    std::int64_t n_max = 12;
    std::string format = "text";
    std::optional<std::int64_t> ldeg, tspan, mspan;
    std::string grid;
    bool eval = false;

    CablingParams params() const { return {p, q, r, s}; }
};

json params_json(const CablingParams& c) { return {{"p", c.p}, {"q", c.q}, {"r", c.r}, {"s", c.s}}; }

json search_json(const SearchReport& r) {
    return {{"L_degree_searched", r.bounds.L_degree},
            {"unknowns", r.unknowns},
            {"equations", r.equations},
            {"rank", r.rank},
            {"nullity", r.nullity},
            {"verdict", verdict_name(r.verdict)},
            {"t_span", r.bounds.t_span},
            {"M_span", r.bounds.M_span},
            {"n_lo", r.bounds.n_lo},
            {"n_hi", r.bounds.n_hi},
            {"operator", r.op ? json(to_text(*r.op)) : json(nullptr)}};
}

json record_json(const TupleRecord& t) {
    return {{"params", params_json(t.params)},
            {"case_tag", case_name(t.case_tag)},
            {"L_degree", t.L_degree},
            {"theorem_applies", t.theorem_applies},
            {"annihilates", t.annihilates},
            {"n_checked", t.n_checked},
            {"b_at_minus1", t.b_at_minus1},
            {"aj_match", t.aj_match},
            {"determinant_ok", t.determinant_ok},
            {"identities_ok", t.identities_ok},
            {"identities_checked", t.identities_checked},
            {"relations_ok", t.relations_ok},
            {"degrees_ok", t.degrees_ok},
            {"minimality", t.minimality ? search_json(*t.minimality) : json(nullptr)},
            {"failures", t.failures},
            {"pass", t.pass()}};
}

std::string yes(bool b) { return b ? "true" : "false"; }

void record_text(std::ostream& out, const TupleRecord& t) {
    out << t.params.to_string() << " " << case_name(t.case_tag) << " L-degree " << t.L_degree << "\n";
    out << "  theorem_applies: " << yes(t.theorem_applies) << "\n";
    out << "  annihilates: " << yes(t.annihilates) << " (n = 1.." << t.n_checked << ")\n";
    out << "  b_at_minus1: " << t.b_at_minus1 << "\n";
    out << "  aj_match: " << yes(t.aj_match) << "\n";
    out << "  determinant_ok: " << yes(t.determinant_ok) << "\n";
    out << "  identities_ok: " << yes(t.identities_ok) << " (" << t.identities_checked << " points)\n";
    out << "  relations_ok: " << yes(t.relations_ok) << "\n";
    out << "  degrees_ok: " << yes(t.degrees_ok) << "\n";
    if (t.minimality)
        out << "  minimality: " << verdict_name(t.minimality->verdict) << " (L-degree " << t.minimality->bounds.L_degree
            << ", " << t.minimality->unknowns << " unknowns)\n";
    for (const auto& f : t.failures) out << "  failed: " << f << "\n";
    out << "  verdict: " << (t.pass() ? "PASS" : "FAIL") << "\n";
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

void emit_json(std::ostream& out, const std::string& command, json results) {
    json doc = {{"meta",
                 {{"tool", "ajcable"},
                  {"version", kVersion},
                  {"command", command},
                  {"isa", std::string(kernels::isa_name(kernels::active_isa()))},
                  {"threads", worker_count()},
                  {"generated_at", utc_now()}}},
                {"results", std::move(results)}};
    out << doc.dump(2) << "\n";
}

int cmd_jones(const Flags& f, bool cable, std::ostream& out) {
    json row;
    IntLaurent1 v;
    if (cable) {
        v = cabled_jones(f.params(), f.n);
        row = {{"knot", "cable"}, {"params", params_json(f.params())}};
    } else {
        v = torus_jones(f.p, f.q, f.n);
        row = {{"knot", "torus"}, {"params", {{"p", f.p}, {"q", f.q}}}};
    }
    row["n"] = f.n;
    row["value"] = to_text(v);
    if (f.format == "json") emit_json(out, cable ? "jones cable" : "jones torus", json::array({row}));
    else out << to_text(v) << "\n";
    return 0;
}

int cmd_apoly(const Flags& f, std::ostream& out) {
    const LPolynomialOverM a = cabled_a_polynomial(f.params());
    if (f.format == "json")
        emit_json(out, "apoly", json::array({{{"params", params_json(f.params())}, {"a_poly", to_text(a)}}}));
    else out << to_text(a) << "\n";
    return 0;
}

int cmd_annihilator(const Flags& f, std::ostream& out) {
    const AnnihilatorBundle b = build_annihilator(f.params());
    json row = {{"params", params_json(f.params())}, {"case_tag", case_name(b.case_tag)}, {"L_degree", b.P.max_degree()}};
    json factors = json::array();
    for (const auto& x : b.factors) factors.push_back(to_text(x));
    row["factors"] = factors;
    row["P"] = to_text(b.P);
    bool ok = true;
    if (f.eval) {
        const AjReport aj = compare_aj(b);
        row["P_at_minus1"] = to_text(aj.p_at_minus1);
        row["a_poly"] = to_text(aj.a_poly);
        row["ratio"] = to_text(aj.ratio);
        row["aj_match"] = aj.pass;
        ok = aj.pass;
    }
    if (f.format == "json") {
        emit_json(out, "annihilator", json::array({row}));
    } else {
        out << f.params().to_string() << " " << case_name(b.case_tag) << " L-degree " << b.P.max_degree() << "\n";
        for (std::size_t i = 0; i < b.factors.size(); ++i) out << "factor " << i << ": " << to_text(b.factors[i]) << "\n";
        if (f.eval) {
            out << "P(-1): " << row["P_at_minus1"].get<std::string>() << "\n";
            out << "A_C: " << row["a_poly"].get<std::string>() << "\n";
            out << "ratio: " << row["ratio"].get<std::string>() << "\n";
            out << "aj_match: " << yes(ok) << "\n";
        } else {
            out << "P: " << to_text(b.P) << "\n";
        }
    }
    return ok ? 0 : 2;
}

int cmd_verify(const std::vector<CablingParams>& tuples, const Flags& f, const std::string& command, std::ostream& out,
               std::ostream& err) {
    for (const auto& c : tuples) c.validate();
    std::vector<TupleRecord> recs(tuples.size());
    const VerifyOptions opt{f.n_max, true};
    parallel_for(tuples.size(), worker_count(), [&](std::size_t i) { recs[i] = verify_tuple(tuples[i], opt); });
    bool ok = true;
    for (const auto& r : recs) {
        if (!r.theorem_applies && command == "verify") err << "warning: " << kRangeWarning << "\n";
        ok = ok && r.pass();
    }
    if (f.format == "json") {
        json results = json::array();
        for (const auto& r : recs) results.push_back(record_json(r));
        emit_json(out, command, results);
    } else {
        for (const auto& r : recs) record_text(out, r);
        if (command == "grid")
            out << "grid: " << std::count_if(recs.begin(), recs.end(), [](const auto& r) { return r.pass(); }) << "/"
                << recs.size() << " tuples pass\n";
    }
    return ok ? 0 : 2;
}

int cmd_degrees(const Flags& f, bool cable, std::ostream& out) {
    if (f.n_max < 2) throw BadParams("--nmax must be at least 2");
    const DegreeAudit a = cable ? audit_degrees(f.params(), f.n_max) : audit_torus_degrees(f.p, f.q, f.n_max);
    if (f.format == "json") {
        json rows = json::array();
        for (const auto& r : a.rows)
            rows.push_back({{"knot", r.knot}, {"n", r.n}, {"side", r.side}, {"predicted", r.predicted},
                            {"actual", r.actual}, {"match", r.match}});
        json params = cable ? params_json(f.params()) : json{{"p", f.p}, {"q", f.q}};
        emit_json(out, "degrees",
                  json::array({{{"params", params}, {"rows", rows}, {"unchecked_sides", a.unchecked_sides},
                                {"pass", a.pass}}}));
    } else {
        for (const auto& r : a.rows)
            out << r.knot << " n=" << r.n << " " << r.side << " predicted " << r.predicted << " actual " << r.actual
                << (r.match ? " ok" : " MISMATCH") << "\n";
        out << "unchecked sides: " << a.unchecked_sides << "\n";
        out << "verdict: " << (a.pass ? "PASS" : "FAIL") << "\n";
    }
    return a.pass ? 0 : 2;
}

int cmd_minimality(const Flags& f, std::ostream& out) {
    const CablingParams c = f.params();
    const AnnihilatorBundle b = build_annihilator(c);
    const std::int64_t full = b.P.max_degree();
    const std::int64_t ldeg = f.ldeg.value_or(full - 1);
    SearchBounds sb = default_bounds(b, ldeg);
    if (f.tspan) sb.t_span = *f.tspan;
    if (f.mspan) sb.M_span = *f.mspan;
    if (f.n_max != 12) sb.n_hi = f.n_max;
    const SearchReport r = search_report(c, sb);
    const bool ok = r.verdict != SearchVerdict::inconclusive && !(ldeg < full && r.verdict == SearchVerdict::found);
    if (f.format == "json") {
        json row = search_json(r);
        row["params"] = params_json(c);
        row["pass"] = ok;
        emit_json(out, "minimality", json::array({row}));
    } else {
        out << c.to_string() << " L-degree searched " << ldeg << " (constructed " << full << ")\n";
        out << "box: t +-" << sb.t_span << ", M +-" << sb.M_span << ", n " << sb.n_lo << ".." << sb.n_hi << "\n";
        out << "unknowns " << r.unknowns << ", equations " << r.equations << ", nullity " << r.nullity << "\n";
        out << "verdict: " << verdict_name(r.verdict) << "\n";
        if (r.op) out << "operator: " << to_text(*r.op) << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Annihilators of colored Jones functions of cables over torus knots"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Flags f;

    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto torus = [&](CLI::App* sub) {
        sub->add_option("-p", f.p, "Torus knot p")->required();
        sub->add_option("-q", f.q, "Torus knot q")->required();
    };
    auto cable = [&](CLI::App* sub) {
        torus(sub);
        sub->add_option("-r", f.r, "Cabling r")->required();
        sub->add_option("-s", f.s, "Cabling s")->required();
    };

    CLI::App* jones = app.add_subcommand("jones", "Colored Jones values");
    jones->require_subcommand(1);
    CLI::App* jt = jones->add_subcommand("torus", "J_T at color n");
    torus(jt);
    jt->add_option("-n", f.n, "Color")->required();
    format(jt);
    CLI::App* jc = jones->add_subcommand("cable", "J_C at color n");
    cable(jc);
    jc->add_option("-n", f.n, "Color")->required();
    format(jc);

    CLI::App* apoly = app.add_subcommand("apoly", "A-polynomial of the cable");
    cable(apoly);
    format(apoly);

    CLI::App* ann = app.add_subcommand("annihilator", "The constructed annihilator");
    cable(ann);
    ann->add_flag("--eval-t-neg1", f.eval, "Evaluate at t = -1 and compare with the A-polynomial");
    format(ann);

    CLI::App* verify = app.add_subcommand("verify", "Identities, annihilation, AJ, determinant, degrees, minimality");
    cable(verify);
    verify->add_option("--nmax", f.n_max, "Largest color checked");
    format(verify);

    CLI::App* degrees = app.add_subcommand("degrees", "Predicted against actual t-degrees");
    torus(degrees);
    degrees->add_option("-r", f.r, "Cabling r");
    degrees->add_option("-s", f.s, "Cabling s");
    degrees->add_option("--nmax", f.n_max, "Largest color checked");
    format(degrees);

    CLI::App* mini = app.add_subcommand("minimality", "Bounded search for a lower-degree annihilator");
    cable(mini);
    mini->add_option("--ldeg", f.ldeg, "L-degree searched");
    mini->add_option("--tspan", f.tspan, "t-exponent half-width");
    mini->add_option("--mspan", f.mspan, "M-exponent half-width");
    mini->add_option("--nmax", f.n_max, "Largest n in the system");
    format(mini);

    CLI::App* grid = app.add_subcommand("grid", "Verify every tuple of a grid file");
    grid->add_option("--grid", f.grid, "Grid file, one \"p q r s\" per line");
    grid->add_option("--nmax", f.n_max, "Largest color checked");
    format(grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (jt->parsed()) return cmd_jones(f, false, out);
        if (jc->parsed()) return cmd_jones(f, true, out);
        if (apoly->parsed()) return cmd_apoly(f, out);
        if (ann->parsed()) return cmd_annihilator(f, out);
        if (verify->parsed()) {
            if (f.n_max < 2) throw BadParams("--nmax must be at least 2");
            return cmd_verify({f.params()}, f, "verify", out, err);
        }
        if (degrees->parsed()) {
            const bool with_cable = degrees->count("-r") + degrees->count("-s") > 0;
            if (with_cable && (degrees->count("-r") == 0 || degrees->count("-s") == 0))
                throw BadParams("-r and -s go together");
            return cmd_degrees(f, with_cable, out);
        }
        if (mini->parsed()) return cmd_minimality(f, out);
        if (grid->parsed()) {
            if (f.n_max < 2) throw BadParams("--nmax must be at least 2");
            return cmd_verify(f.grid.empty() ? default_grid() : load_grid(f.grid), f, "grid", out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace ajcable
