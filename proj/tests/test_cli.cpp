// exercises the installed command-line surface: exit codes, golden-file
// overrides, and byte-level determinism of reports

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("HECKEMU_BIN");
    REQUIRE_MESSAGE(p != nullptr, "HECKEMU_BIN must point at the heckemu binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("tables 3D4 exits 0 and reports every row") {
    RunResult r = run("tables 3D4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all rows match") != std::string::npos);
}

TEST_CASE("tables 2E6 exits 0 (with the two documented errata flagged)") {
    RunResult r = run("tables 2E6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all rows match") != std::string::npos);
    CHECK(r.output.find("erratum") != std::string::npos);
}

TEST_CASE("a corrupted golden file makes tables exit 1 with a row diff") {
    std::string path = "corrupted_golden.json";
    {
        std::ofstream os(path);
        os << R"json({"rows":[{"s":"G2(a1)","point":"(1,q)","phi":{"2":-2,"3":-2,"6":-1}}]})json";
    }
    RunResult r = run("tables 3D4 --golden " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("G2(a1)") != std::string::npos);
    CHECK(r.output.find("MISMATCH") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify reports are byte-identical under a fixed seed") {
    std::string args = "verify xi --base-cases --rank 0..1 --seed 7 --format json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("verify phi over a range exits 0") {
    RunResult r = run("verify phi --mplus 3/2..5/2 --mminus 1/2..1/2 --rank 0..1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all verifications passed") != std::string::npos);
}

TEST_CASE("malformed ranges exit 2") {
    CHECK(run("verify phi --mplus nonsense").exit_code == 2);
    CHECK(run("verify phi --mplus 0.5..1.5").exit_code == 2);
}

TEST_CASE("unknown systems and bad points exit 2") {
    CHECK(run("enumerate B9").exit_code == 2);
    CHECK(run("enumerate E8").exit_code == 2);
    CHECK(run("residue G2 \"(q,\"").exit_code == 2);
}

TEST_CASE("residue subcommand reproduces a table row") {
    RunResult r = run("residue G2 \"(1,q)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("residual") != std::string::npos);
    CHECK(r.output.find("Phi2^-2 Phi3^-2 Phi6^-2") != std::string::npos);
}

TEST_CASE("enumerate prints the completeness disclaimer") {
    RunResult r = run("enumerate B2 --params 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("complete only up to") != std::string::npos);
}
