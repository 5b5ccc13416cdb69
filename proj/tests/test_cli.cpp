#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stirsys/cli.hpp"
#include "stirsys/serialize.hpp"

using namespace stirsys;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("stirling command") {
    CliResult r = run({"stirling", "--kind", "2", "-n", "4", "-k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");

    CliResult r1 = run({"stirling", "--kind", "1", "-n", "3", "-k", "1"});
    CHECK(r1.out == "2\n");

    CliResult rj = run({"stirling", "--kind", "2", "-n", "4", "-k", "2", "--format", "json"});
    Json j = Json::parse(rj.out);
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == "7");
}

TEST_CASE("cpoly command") {
    CliResult r = run({"cpoly", "--k1", "1", "--k2", "1", "-l", "2", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 * x^1 y^1\n");

    CliResult rj = run({"cpoly", "--k1", "1", "--k2", "0", "-l", "2", "--format", "json"});
    Json j = Json::parse(rj.out);
    CHECK(poly_from_json(j["poly"]) == cpoly(1, 0, 2));
    CHECK(j["text"] == "x^2 + 2 * x^1 z^1");
}

TEST_CASE("matrix and det commands") {
    CliResult r = run({"matrix", "--points", "0,0;1,0;0,1", "-l", "2", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["entries"].size() == 3);
    CHECK(poly_from_json(j["entries"][1][2]) == cpoly(1, 0, 2));

    CliResult d = run({"det", "--points", "0,0;1,0;0,1", "--format", "json"});
    Json dj = Json::parse(d.out);
    CHECK(dj["det_text"] == "-x^2 y^1 + x^1 y^2");
    CHECK(dj["closed_form"]["matches_bareiss"] == true);

    CliResult dq = run({"det", "--points", "0,0;1,0;0,1", "--rel", "x+y", "--format", "json"});
    Json qj = Json::parse(dq.out);
    CHECK(qj["det_text"] == "-2 * t^3");
    CHECK(qj["closed_form"]["matches_bareiss"] == true);
}

TEST_CASE("solve command") {
    CliResult r = run({"solve", "--points", "0,0;1,0", "--mults", "1,1", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["residual_zero"] == true);
    CHECK(j["b_a"].size() == 3);

    CliResult q = run({"solve", "--points", "0,0;1,0;0,1;1,1", "--rel", "x+y", "--mults", "1,1,1",
                       "--format", "json"});
    CHECK(q.code == 0);
    Json qj = Json::parse(q.out);
    CHECK(qj["reduced_set"].size() == 3);
}

TEST_CASE("points can come from a JSON file") {
    std::string path = "cli_points_test.json";
    {
        std::ofstream f(path);
        f << "[[0,0],[1,0],[0,1]]";
    }
    CliResult r = run({"det", "--points-file", path, "--format", "json"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["det_text"] == "-x^2 y^1 + x^1 y^2");

    CHECK(run({"det", "--points-file", "does_not_exist.json"}).code == 2);
}

TEST_CASE("reduce command") {
    CliResult r = run({"reduce", "--points", "0,0;1,0;2,0;3,0;0,1;0,2;0,3;0,4", "--rel", "2x-3y",
                       "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["case"] == "neg");
    CHECK(j["r0"] == 7);
    CHECK(j["dropped_rows"].size() == 1);
    CHECK(j["dropped_rows"][0]["point"] == Json::array({0, 3}));
}

TEST_CASE("exit codes") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"cpoly", "--k1", "1"}).code == 2);                      // missing required
    CHECK(run({"reduce", "--points", "0,0", "--rel", "zebra"}).code == 2);
    CHECK(run({"det", "--points", "0,0;;"}).code == 2);

    // non-staircase input carries the diagnostic and exits as usage error
    CliResult bad = run({"solve", "--points", "0,0;0,2", "--mults", "1,1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("lacks predecessor (0,1)") != std::string::npos);

    // verify returns 1 on a false verdict
    CHECK(run({"verify", "counterexample"}).code == 1);
    CHECK(run({"verify", "det"}).code == 0);
    CHECK(run({"verify", "bogus"}).code == 2);
}

TEST_CASE("deterministic output") {
    auto a = run({"sweep", "--suite", "lemma", "--seed", "0", "--format", "json"});
    auto b = run({"sweep", "--suite", "lemma", "--seed", "0", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto t1 = run({"verify", "thest", "--seed", "3"});
    auto t2 = run({"verify", "thest", "--seed", "3"});
    CHECK(t1.code == 0);
    CHECK(t1.out == t2.out);
}
