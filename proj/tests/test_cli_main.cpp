// End-to-end checks of the installed command-line surface. Each case shells
// out to the built binary and inspects stdout plus the exit code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HLIRRED_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const std::string kData = HLIRRED_DATA_DIR;

}  // namespace

TEST_CASE("homs reports the trefoil invariants") {
    auto r = run("homs --pres " + kData + "/examples/trefoil.pres --group A4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ks_w = 36") != std::string::npos);
    CHECK(r.out.find("ks = 6") != std::string::npos);
    CHECK(r.out.find("surjective orbits: 2") != std::string::npos);
}

TEST_CASE("homs --json emits the frozen free-rank-2 values") {
    auto r = run("homs --pres " + kData + "/examples/free2.pres --group A5 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ks_w"] == 3600);
    CHECK(j["ks"] == 77);
    CHECK(j["ks_burnside"] == 77);
    CHECK(j["genus"] == 2);
}

TEST_CASE("homs json output is byte-identical across worker counts") {
    auto base = "homs --pres " + kData + "/examples/figure8.pres --group A5 --json --jobs ";
    auto one = run(base + "1");
    auto eight = run(base + "8");
    CHECK(one.exit_code == 0);
    CHECK(one.out == eight.out);
}

TEST_CASE("homs exits 2 on a missing file") {
    CHECK(run("homs --pres /nonexistent.pres --group A4").exit_code == 2);
}

TEST_CASE("homs accepts a generator file in cycle notation") {
    std::string path = "a4_gens_tmp.txt";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fputs("# alternating group on 4 points\n(0 1 2)\n(0 1)(2 3)\n", f);
    fclose(f);
    auto r = run("homs --pres " + kData + "/examples/trefoil.pres --group file:" + path +
                 " --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ks_w"] == 36);
    CHECK(j["ks"] == 6);
    std::remove(path.c_str());
}

TEST_CASE("homs exits 3 when the group order cap is exceeded") {
    // Sn:8 has order 40320, above the default cap
    auto r = run("homs --pres " + kData + "/examples/unknot.pres --group Sn:8");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verdict renders the audit line for HK4_1") {
    auto r = run("verdict --catalog " + kData + "/paper_tables.json HK4_1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Irreducible") != std::string::npos);
    CHECK(r.out.find("C11 failed: 56 mod 12 = 8") != std::string::npos);
    CHECK(r.out.find("C14 failed: 379 mod 60 = 19") != std::string::npos);
}

TEST_CASE("verdict reports HL6_12 as inconclusive with its witnesses") {
    auto r = run("verdict --catalog " + kData + "/paper_tables.json HL6_12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Inconclusive") != std::string::npos);
    CHECK(r.out.find("C11 satisfied") != std::string::npos);
    CHECK(r.out.find("C13 satisfied k=0") != std::string::npos);
}

TEST_CASE("verdict --all --json yields all 38 rows") {
    auto r = run("verdict --catalog " + kData + "/paper_tables.json --all --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 38);
}

TEST_CASE("table renders one row per record") {
    auto r = run("table --catalog " + kData + "/paper_tables.json");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 39);  // header + 38 records
    CHECK(r.out.find("HK4_1") != std::string::npos);
    CHECK(r.out.find("n.a.") != std::string::npos);
    CHECK(r.out.find("✓") != std::string::npos);
}

TEST_CASE("wirtinger emits the presentation and the genus comment") {
    auto r = run("wirtinger --diagram " + kData + "/examples/trefoil.dgm");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gens a b c") != std::string::npos);
    CHECK(r.out.find("# genus 1, type [1]") != std::string::npos);

    auto t = run("wirtinger --diagram " + kData + "/examples/theta.dgm");
    CHECK(t.out.find("# genus 2, type [0,1]") != std::string::npos);
}

TEST_CASE("table of an empty catalog prints the header only") {
    std::string path = "empty_tmp.json";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fputs("[]\n", f);
    fclose(f);
    auto r = run("table --catalog " + path);
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 1);
    CHECK(r.out.find("name") == 0);
    std::remove(path.c_str());
}

TEST_CASE("wirtinger exits 2 on a dangling arc") {
    std::string path = "dangling_tmp.dgm";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fputs("arcs 2\nx + 1 2 2\n", f);
    fclose(f);
    CHECK(run("wirtinger --diagram " + path).exit_code == 2);
    std::remove(path.c_str());
}
