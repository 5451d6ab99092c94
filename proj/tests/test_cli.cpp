#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

#ifndef CENTRA_BIN_PATH
#error "CENTRA_BIN_PATH must point at the centra executable"
#endif
#ifndef CENTRA_MANIFEST_PATH
#error "CENTRA_MANIFEST_PATH must point at the bundled campaign manifest"
#endif

namespace {

struct CmdResult {
    int status = -1;
    std::string out; // stdout and stderr interleaved
    bool contains(const std::string& needle) const { return out.find(needle) != std::string::npos; }
};

CmdResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string("\"") + CENTRA_BIN_PATH + "\" " + args + " 2>&1";
    CmdResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    const int rc = pclose(p);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    INFO("command: " << cmd << "\noutput:\n" << res.out);
    return res;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    json j;
    in >> j;
    return j;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("centra_cli_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("catalog lists the builtin identities", "[cli]") {
    CmdResult res = run_cli("catalog");
    INFO(res.out);
    REQUIRE(res.status == 0);
    for (const char* key : {"left-centralizer", "jordan-left", "vukman-1999", "vukman-2001",
                            "vukman-ulbl-2003a", "vukman-ulbl-2003b", "mn-jordan(1,1)"})
        REQUIRE(res.contains(key));
    REQUIRE(res.contains("2*T(x^2) = T(x)*x + x*T(x)"));
}

TEST_CASE("ring check reports structure and predicates", "[cli]") {
    TempPath out("ring.json");
    CmdResult res = run_cli("ring check M:2:Zn:9 --semiprime --torsion 2 --json " + out.path);
    INFO(res.out);
    REQUIRE(res.status == 0);
    REQUIRE(res.contains("exponent 9, rank 4, cardinality 6561, unital"));
    REQUIRE(res.contains("semiprime: NO, a*R*a = 0 for a [3,0,0,0]"));
    REQUIRE(res.contains("2-torsion-free: yes"));
    json j = read_json_file(out.path);
    REQUIRE(j.at("associative") == true);
    REQUIRE(j.at("semiprime") == false);
    REQUIRE(j.at("semiprime_witness") == json::parse("[3,0,0,0]"));
    REQUIRE(j.at("torsion_free").at("holds") == true);

    CmdResult sp = run_cli("ring check M:2:Zn:3 --semiprime --prime --center");
    INFO(sp.out);
    REQUIRE(sp.status == 0);
    REQUIRE(sp.contains("semiprime: yes"));
    REQUIRE(sp.contains("prime: yes"));
    REQUIRE(sp.contains("center: 3 elements"));
}

TEST_CASE("solve reports cardinality, classification, and members", "[cli]") {
    CmdResult res = run_cli("solve M:2:Zn:4 jordan-left");
    INFO(res.out);
    REQUIRE(res.status == 0);
    REQUIRE(res.contains("solution space: 256 additive maps"));

    TempPath out("solve.json");
    CmdResult v = run_cli("solve M:2:Zn:3 vukman-1999 --verify-sufficiency --json " + out.path);
    INFO(v.out);
    REQUIRE(v.status == 0);
    REQUIRE(v.contains("solution space: 3 additive maps"));
    REQUIRE(v.contains("3 members re-checked over all 81 tuples, mismatches 0"));
    json j = read_json_file(out.path);
    REQUIRE(j.at("cardinality") == 3);
    REQUIRE(j.at("members").size() == 3);
    REQUIRE(j.at("sufficiency").at("verified") == true);
    REQUIRE(j.at("classification").at("scalar") == 2);
    REQUIRE(j.at("classification").at("zero") == 1);
}

TEST_CASE("solve binds known slots", "[cli]") {
    CmdResult res = run_cli("solve M:2:Zn:3 \"mn-jordan(1,1)\" --bind T0=scalar:2");
    INFO(res.out);
    REQUIRE(res.status == 0);
    REQUIRE(res.contains("solution space: 1 additive maps"));
    REQUIRE(res.contains("scalar: 1"));

    CmdResult missing = run_cli("solve M:2:Zn:3 \"mn-jordan(1,1)\"");
    REQUIRE(missing.status == 2);
    REQUIRE(missing.contains("not bound"));
}

TEST_CASE("solve samples the classification above the enumeration cap", "[cli]") {
    CmdResult res = run_cli("solve M:2:Zn:4 left-centralizer --enumerate-cap 10");
    INFO(res.out);
    REQUIRE(res.status == 0);
    REQUIRE(res.contains("solution space: 256 additive maps"));
    REQUIRE(res.contains("(sampled basis)"));
}

TEST_CASE("check-map tests laws and memberships", "[cli]") {
    CmdResult def = run_cli("check-map M:2:Zn:3 scalar:2");
    INFO(def.out);
    REQUIRE(def.status == 0);
    for (const char* law : {"left-centralizer", "right-centralizer", "two-sided-centralizer",
                            "jordan-left", "jordan-right"})
        REQUIRE(def.contains(std::string(law) + ": holds (generator grid)"));

    CmdResult ex = run_cli(
        "check-map M:2:Zn:2 \"[[1,1,1,1],[0,0,0,0],[0,0,0,0],[1,1,1,1]]\""
        " --left --exhaustive --identity vukman-1999");
    INFO(ex.out);
    REQUIRE(ex.status == 0);
    REQUIRE(ex.contains("left-centralizer: FAILS (all elements)"));
    REQUIRE(ex.contains("identity vukman-1999: member of the solution space, oracle agrees"));

    CmdResult tri = run_cli("check-map TRI:Zn:2 second-projection --jordan-left --left --exhaustive");
    INFO(tri.out);
    REQUIRE(tri.status == 0);
    REQUIRE(tri.contains("jordan-left: holds (all elements)"));
    REQUIRE(tri.contains("left-centralizer: FAILS (all elements)"));
}

TEST_CASE("verify-all runs campaigns and writes canonical reports", "[cli]") {
    TempPath out1("report1.json"), out2("report2.json");
    const std::string base =
        std::string("verify-all --manifest \"") + CENTRA_MANIFEST_PATH + "\" --filter thm-2.10";
    CmdResult a = run_cli(base + " --json " + out1.path);
    INFO(a.out);
    REQUIRE(a.status == 0);
    REQUIRE(a.contains("[PASS] thm-2.10"));
    REQUIRE(a.contains("summary: 1/1 campaigns passed"));

    CmdResult b = run_cli(base + " --json " + out2.path);
    REQUIRE(b.status == 0);

    json r1 = read_json_file(out1.path), r2 = read_json_file(out2.path);
    REQUIRE(r1.at("schema") == 1);
    REQUIRE(r1.at("summary").at("pass") == true);
    r1.erase("timings");
    r2.erase("timings");
    REQUIRE(r1.dump() == r2.dump());
}

TEST_CASE("verify-all surfaces refuted expectations as failures", "[cli]") {
    const std::string manifest = std::string("--manifest \"") + CENTRA_MANIFEST_PATH + "\"";
    CmdResult res = run_cli("verify-all " + manifest + " --filter ex-2.12");
    INFO(res.out);
    REQUIRE(res.status == 1);
    REQUIRE(res.contains("[FAIL] ex-2.12"));
    REQUIRE(res.contains("expect true, actual false"));

    CmdResult none = run_cli("verify-all " + manifest + " --filter zzz-no-such-campaign");
    REQUIRE(none.status == 2);
    REQUIRE(none.contains("no campaign id matches"));
}

TEST_CASE("usage and parse errors exit 2", "[cli]") {
    REQUIRE(run_cli("").status == 2);
    REQUIRE(run_cli("frobnicate").status == 2);
    CmdResult ring = run_cli("ring check Q:7");
    REQUIRE(ring.status == 2);
    REQUIRE(ring.contains("bad ring expression"));
    CmdResult ident = run_cli("solve M:2:Zn:3 no-such-identity");
    REQUIRE(ident.status == 2);
    REQUIRE(ident.contains("unknown identity"));
    CmdResult help = run_cli("--help");
    REQUIRE(help.status == 0);
    REQUIRE(help.contains("verify-all"));
}

TEST_CASE("budget overruns exit 3", "[cli]") {
    CmdResult res = run_cli("ring check M:2:Zn:9 --semiprime", "CENTRA_BUDGET=enum=10");
    INFO(res.out);
    REQUIRE(res.status == 3);
    REQUIRE(res.contains("budget exceeded"));

    CmdResult bad = run_cli("ring check M:2:Zn:9 --semiprime", "CENTRA_BUDGET=bogus=1");
    REQUIRE(bad.status == 2);
}
