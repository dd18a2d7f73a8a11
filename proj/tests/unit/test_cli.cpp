#include <doctest.h>

#include "ajcable/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace ajcable;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ajcable");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("jones torus example") {
    const Run r = cli({"jones", "torus", "-p", "3", "-q", "2", "-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "t^-2 + t^-6 + t^-10 - t^-18\n");
}

TEST_CASE("verify json example") {
    const Run r = cli({"verify", "-p", "3", "-q", "2", "-r", "13", "-s", "2", "--format", "json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    const json& res = doc.at("results").at(0);
    CHECK(res.at("annihilates") == true);
    CHECK(res.at("aj_match") == true);
    CHECK(res.at("case_tag") == "S_EQ_2");
    CHECK(res.at("minimality").at("verdict") == "no annihilator within bounds");
    CHECK(doc.at("meta").at("tool") == "ajcable");
    CHECK(r.err.empty());
}

TEST_CASE("json round-trips byte for byte") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"verify", "-p", "5", "-q", "3", "-r", "-7", "-s", "3", "--format", "json"},
          {"annihilator", "-p", "3", "-q", "2", "-r", "-1", "-s", "4", "--eval-t-neg1", "--format", "json"},
          {"degrees", "-p", "5", "-q", "2", "--nmax", "8", "--format", "json"}}) {
        const Run r = cli(args);
        CHECK(r.code == 0);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("text and json verdicts agree") {
    std::mt19937_64 rng(20261016);
    const auto grid = default_grid();
    for (int i = 0; i < 3; ++i) {
        const CablingParams c = grid[rng() % grid.size()];
        std::vector<std::string> args{"verify", "-p", std::to_string(c.p), "-q", std::to_string(c.q),
                                      "-r", std::to_string(c.r), "-s", std::to_string(c.s)};
        const Run text = cli(args);
        args.insert(args.end(), {"--format", "json"});
        const Run js = cli(args);
        const bool jpass = json::parse(js.out).at("results").at(0).at("pass").get<bool>();
        CHECK(text.code == js.code);
        CHECK((text.out.find("verdict: PASS") != std::string::npos) == jpass);
    }
}

TEST_CASE("exit codes") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 1);
    CHECK(cli({"jones", "torus", "-p", "3"}).code == 1);
    CHECK(cli({"verify", "-p", "3", "-q", "2", "-r", "4", "-s", "2"}).code == 1);
    CHECK(cli({"jones", "torus", "-p", "4", "-q", "2", "-n", "2"}).code == 1);
    CHECK(cli({"verify", "-p", "3", "-q", "2", "-r", "13", "-s", "2", "--format", "xml"}).code == 1);
    CHECK(cli({"minimality", "-p", "3", "-q", "2", "-r", "13", "-s", "2", "--ldeg", "2"}).code == 0);
}

TEST_CASE("range warning") {
    const Run r = cli({"verify", "-p", "3", "-q", "2", "-r", "5", "-s", "2"});
    CHECK(r.code == 0);
    CHECK(r.err.find("r strictly between 0 and pqs: theorem minimality claim not applicable") != std::string::npos);
    CHECK(r.out.find("minimality:") == std::string::npos);
}

TEST_CASE("shipped default grid matches the built-in grid") {
    std::ifstream in(AJCABLE_GRID_DIR "/default.grid");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == grid_text(default_grid()));
    CHECK(load_grid(AJCABLE_GRID_DIR "/default.grid") == default_grid());
    CHECK(parse_grid(grid_text(default_grid())) == default_grid());
}

TEST_CASE("grid on a small file keeps input order") {
    const std::string path = "cli_small.grid";
    {
        std::ofstream f(path);
        f << "# p q r s\n5 3 -1 2\n3 2 -1 3\n\n-3 2 1 4\n";
    }
    const Run r = cli({"grid", "--grid", path, "--nmax", "6", "--format", "json"});
    CHECK(r.code == 0);
    const json res = json::parse(r.out).at("results");
    REQUIRE(res.size() == 3);
    CHECK(res[0].at("params").at("p") == 5);
    CHECK(res[1].at("params").at("s") == 3);
    CHECK(res[2].at("params").at("s") == 4);
    CHECK(cli({"grid", "--grid", "does_not_exist.grid"}).code == 1);
}
