/**
 * End-to-end CLI tests: every documented exit code, the file formats, and
 * byte-identical reports across thread counts.  The binary location comes
 * from the build system.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;  // stdout + stderr
};

std::string tempDir()
{
    static int counter = 0;
    const std::string dir = "/tmp/aiinv-cli-test-" + std::to_string(::getpid()) + "-"
                            + std::to_string(counter++);
    std::system(("mkdir -p " + dir).c_str());
    return dir;
}

void writeFile(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args, const std::string& extraEnv = "")
{
    const std::string dir = tempDir();
    const std::string outPath = dir + "/cmd.out";
    std::string command = extraEnv.empty() ? "" : extraEnv + " ";
    command += std::string(AIINV_CLI_PATH) + " " + args + " > " + outPath + " 2>&1";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exitCode = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.output = readFile(outPath);
    return result;
}

const std::string kTriangleIdeal = "vars: 3\n1 1 1\n";
const std::string kTriangleComplex = "vertices: 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("ai command")
{
    const std::string dir = tempDir();
    writeFile(dir + "/tri.ideal", kTriangleIdeal);

    SECTION("human output")
    {
        const RunResult r = run("ai --ideal " + dir + "/tri.ideal");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("reg:  2") != std::string::npos);
        CHECK(r.output.find("dim:  2") != std::string::npos);
    }
    SECTION("JSON output")
    {
        const RunResult r = run("ai --ideal " + dir + "/tri.ideal --json");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("\"a\":[null,null,0]") != std::string::npos);
        CHECK(r.output.find("\"reg\":2") != std::string::npos);
    }
    SECTION("malformed input exits 2 with a position")
    {
        writeFile(dir + "/bad.ideal", "vars: 3\n1 oops 1\n");
        const RunResult r = run("ai --ideal " + dir + "/bad.ideal");
        CHECK(r.exitCode == 2);
        CHECK(r.output.find("line 2") != std::string::npos);
    }
    SECTION("non-prime field exits 2")
    {
        const RunResult r = run("ai --ideal " + dir + "/tri.ideal --field fp:4");
        CHECK(r.exitCode == 2);
    }
    SECTION("caps exit 3")
    {
        const RunResult capped = run("ai --ideal " + dir + "/tri.ideal --max-vars 2");
        CHECK(capped.exitCode == 3);
        const RunResult budget =
            run("ai --ideal " + dir + "/tri.ideal", "AIINV_MAX_MS=0");
        CHECK(budget.exitCode == 3);
    }
    SECTION("prime field is accepted")
    {
        const RunResult r = run("ai --ideal " + dir + "/tri.ideal --field fp:2 --json");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("\"reg\":2") != std::string::npos);
    }
}

TEST_CASE("degree-complex command")
{
    const std::string dir = tempDir();
    writeFile(dir + "/tri.ideal", kTriangleIdeal);
    SECTION("triangle at the origin")
    {
        const RunResult r = run("degree-complex --ideal " + dir
                                + "/tri.ideal --alpha \"0 0 0\"");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("[[1,2],[1,3],[2,3]]") != std::string::npos);
    }
    SECTION("length mismatch exits 2")
    {
        const RunResult r =
            run("degree-complex --ideal " + dir + "/tri.ideal --alpha \"0 0\"");
        CHECK(r.exitCode == 2);
    }
    SECTION("unit ideal gives the void complex")
    {
        writeFile(dir + "/unit.ideal", "vars: 2\n0 0\n");
        const RunResult r =
            run("degree-complex --ideal " + dir + "/unit.ideal --alpha \"0 0\"");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("\"facets\":null") != std::string::npos);
    }
}

TEST_CASE("sr and homology commands")
{
    const std::string dir = tempDir();
    writeFile(dir + "/tri.cx", kTriangleComplex);
    const RunResult toIdeal = run("sr --complex " + dir + "/tri.cx");
    CHECK(toIdeal.exitCode == 0);
    CHECK(toIdeal.output == "vars: 3\n1 1 1\n");

    writeFile(dir + "/tri.ideal", kTriangleIdeal);
    const RunResult toComplex = run("sr --ideal " + dir + "/tri.ideal --json");
    CHECK(toComplex.exitCode == 0);
    CHECK(toComplex.output.find("[[1,2],[1,3],[2,3]]") != std::string::npos);

    const RunResult both = run("sr --ideal " + dir + "/tri.ideal --complex " + dir + "/tri.cx");
    CHECK(both.exitCode == 2);

    const RunResult betti = run("homology --complex " + dir + "/tri.cx");
    CHECK(betti.exitCode == 0);
    CHECK(betti.output.find("H~(1): 1") != std::string::npos);
    const RunResult bettiF2 = run("homology --complex " + dir + "/tri.cx --field fp:2 --json");
    CHECK(bettiF2.exitCode == 0);
    CHECK(bettiF2.output.find("{\"i\":1,\"dim\":1}") != std::string::npos);
}

TEST_CASE("verify command")
{
    const std::string dir = tempDir();
    SECTION("bundled suite passes")
    {
        const RunResult r = run("verify all --suite " + std::string(AIINV_SOURCE_DIR)
                                + "/suites/paper.jsonl");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("failed 0") != std::string::npos);
    }
    SECTION("empty suite exits 0 with zero counts")
    {
        writeFile(dir + "/empty.jsonl", "\n");
        const RunResult r = run("verify all --suite " + dir + "/empty.jsonl");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("passed 0 failed 0") != std::string::npos);
    }
    SECTION("a wrong pinned value fails with a replay file")
    {
        writeFile(dir + "/broken.jsonl",
                  "{\"check\":\"symbolic\",\"complex\":{\"vertices\":3,\"facets\":"
                  "[[1,2],[1,3],[2,3]]},\"n\":2,\"expect_lhs\":99}\n");
        const RunResult r = run("verify symbolic --suite " + dir + "/broken.jsonl --out "
                                + dir + "/broken-report.jsonl");
        CHECK(r.exitCode == 1);
        CHECK(r.output.find("failed 1") != std::string::npos);
        CHECK(r.output.find("replay file:") != std::string::npos);
        CHECK(readFile(dir + "/broken-report.jsonl").find("\"fail\"") != std::string::npos);
        CHECK(!readFile(dir + "/broken-report.jsonl.replay.jsonl").empty());
    }
    SECTION("random suites are reproducible and thread-count independent")
    {
        const std::string base = "verify fiber --random 3 --seed 42 --max-power 1";
        const RunResult one = run(base + " --threads 1 --out " + dir + "/r1.jsonl");
        const RunResult two = run(base + " --threads 2 --out " + dir + "/r2.jsonl");
        CHECK(one.exitCode == 0);
        CHECK(two.exitCode == 0);
        const std::string first = readFile(dir + "/r1.jsonl");
        CHECK(first == readFile(dir + "/r2.jsonl"));
        CHECK(!first.empty());
    }
    SECTION("unknown kind is a usage error")
    {
        const RunResult r = run("verify sphere --random 1");
        CHECK(r.exitCode != 0);
    }
}
