#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qres/io.hpp"

using qres::io::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string fixture(const std::string& name) { return std::string(QRES_FIXTURES) + "/" + name; }

std::string scratch(const std::string& name) { return std::string(QRES_SCRATCH) + "/" + name; }

Run run(const std::string& args)
{
    const std::string err = scratch("stderr.txt");
    const std::string cmd = std::string(QRES_CLI) + " " + args + " 2>" + err;
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
}

void write(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    out << j.dump(2);
}

}  // namespace

TEST_CASE("homology of the shift fixture vanishes")
{
    Run r = run("homology " + fixture("k2_shift.json"));
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["exact"] == true);
    for (const auto& h : doc["homology"])
        CHECK(h["dims"] == Json::array({0}));
}

TEST_CASE("rz k on S_2 stores the (2,1) object and its differential")
{
    Run r = run("rz k " + fixture("s2_module.json"));
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["command"] == "rz-k");
    CHECK(doc["diagram"]["module"]["dims"] == Json::array({2, 1}));
    CHECK(doc["diagram"]["differential"] == Json::parse("[[[0, 0], [1, 0]], [[0]]]"));
    for (const auto& [key, value] : doc["certificates"].items())
        CHECK_MESSAGE(value == true, key);

    // H of the result gives S_2 back.
    write(scratch("k.json"), doc);
    Run h = run("rz h " + scratch("k.json"));
    REQUIRE(h.code == 0);
    CHECK(Json::parse(h.out)["module"]["dims"] == Json::array({0, 1}));
}

TEST_CASE("outputs re-verify and tampering is caught")
{
    const std::string commands[] = {
        "resolve " + fixture("s2_loop.json"),
        "resolve " + fixture("cyclic32_stalk.json"),
        "resolve " + fixture("d4_stalk.json"),
        "split " + fixture("shift_plus_line.json"),
        "check-minimal " + fixture("shift_plus_line.json"),
        "hom-derived " + fixture("s1_loop.json") + " " + fixture("s2_loop.json"),
        "iso " + fixture("s2_loop.json") + " " + fixture("s2_loop.json"),
        "rz k " + fixture("s2_module.json"),
    };
    for (const auto& c : commands) {
        CAPTURE(c);
        Run r = run("--output " + scratch("out.json") + " " + c);
        CHECK(r.code <= 1);
        Run v = run("verify " + scratch("out.json"));
        CHECK(v.code == 0);
        CHECK(Json::parse(v.out)["valid"] == true);
    }

    Run r = run("resolve " + fixture("s2_loop.json"));
    Json doc = Json::parse(r.out);
    doc["certificates"]["minimal"] = false;
    write(scratch("tampered.json"), doc);
    CHECK(run("verify " + scratch("tampered.json")).code == 3);

    doc = Json::parse(r.out);
    // A zero map is not a weak equivalence.
    for (auto& group : doc["map"])
        for (auto& m : group)
            for (auto& row : m)
                for (auto& e : row)
                    e = 0;
    write(scratch("tampered.json"), doc);
    Run v = run("verify " + scratch("tampered.json"));
    CHECK(v.code == 3);
    CHECK(Json::parse(v.out)["checks"]["weak_equivalence"] == false);
}

TEST_CASE("identical jobs give byte-identical outputs")
{
    for (const std::string c : {"--seed 7 resolve " + fixture("d4_stalk.json"),
                                "--seed 3 split " + fixture("shift_plus_line.json"),
                                std::string("selftest tiny")}) {
        CAPTURE(c);
        Run a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verdicts and exit codes")
{
    CHECK(run("check-minimal " + fixture("shift_plus_line.json")).code == 1);
    CHECK(run("check-minimal " + fixture("s2_loop.json")).code == 1);
    Run r = run("resolve " + fixture("s2_loop.json"));
    Json doc = Json::parse(r.out);
    Json target = {{"schema", "qres/1"},     {"field", doc["field"]},     {"algebra", doc["algebra"]},
                   {"shape", doc["shape"]}, {"diagram", doc["target"]}};
    write(scratch("target.json"), target);
    CHECK(run("check-minimal " + scratch("target.json")).code == 0);

    CHECK(run("iso " + fixture("s1_loop.json") + " " + fixture("s2_loop.json")).code == 1);
    Run h = run("hom-derived " + fixture("s1_loop.json") + " " + fixture("s2_loop.json"));
    REQUIRE(h.code == 0);
    CHECK(Json::parse(h.out)["dimension"] == 1);
    CHECK(run("--field 3 homology " + fixture("s2_loop.json")).code == 0);
}

TEST_CASE("input errors name the problem")
{
    std::ofstream(scratch("malformed.json")) << "{\"schema\": \"qres/1\",\n \"field\": 2,\n \"algebra\": {\"named\" \"k\"}}";
    Run r = run("homology " + scratch("malformed.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed.json:3:") != std::string::npos);

    Json doc = Json::parse(slurp(fixture("k2_shift.json")));
    doc["algebra"]["named"] = "E8";
    write(scratch("unknown.json"), doc);
    r = run("homology " + scratch("unknown.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("/algebra/named") != std::string::npos);

    doc = Json::parse(slurp(fixture("k2_shift.json")));
    doc["diagram"]["differential"][0][0][0] = 1;
    write(scratch("not_square_zero.json"), doc);
    CHECK(run("homology " + scratch("not_square_zero.json")).code == 2);

    r = run("split " + fixture("rational_shift.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("decomposition-unavailable") != std::string::npos);
    CHECK(r.err.find("[digest ") != std::string::npos);

    CHECK(run("frobnicate").code == 2);
    CHECK(run("homology").code == 2);
}

TEST_CASE("tiny selftest passes within a minute")
{
    const auto start = std::chrono::steady_clock::now();
    Run r = run("--format summary selftest tiny");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(secs < 60);
}
