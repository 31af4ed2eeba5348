#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef NRADIUS_CLI_PATH
#error "NRADIUS_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(NRADIUS_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& contents) : path(name) {
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kNilpotent = R"({"rows":2,"cols":2,"data":[[0,0],[1,0],[0,0],[0,0]]})";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("compute subcommand") {
    TempFile nil("cli_nil.json", kNilpotent);
    RunResult r = run("compute --in " + nil.path + " --what omega");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.5\n");

    r = run("compute --in " + nil.path + " --what norm");
    CHECK(r.out == "1\n");

    r = run("compute --in " + nil.path + " --what specrad");
    CHECK(r.exit_code == 0);

    r = run("compute --in " + nil.path + " --what abs");
    CHECK(r.out.find("\"rows\":2") != std::string::npos);

    // identical invocations produce identical bytes
    RunResult again = run("compute --in " + nil.path + " --what omega");
    CHECK(again.out == "0.5\n");
}

TEST_CASE("bound subcommand with and without check") {
    TempFile nil("cli_nil2.json", kNilpotent);
    RunResult r = run("bound --id el-haddad-kittaneh --r 2 --in " + nil.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.5\n");

    r = run("bound --id norm-lower --in " + nil.path + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("holds true") != std::string::npos);
    CHECK(r.out.find("bound 0.5") != std::string::npos);
    CHECK(r.out.find("omega_power 0.5") != std::string::npos);
}

TEST_CASE("exit codes") {
    TempFile nil("cli_nil3.json", kNilpotent);
    CHECK(run("bound --id does-not-exist --in " + nil.path).exit_code == 2);
    CHECK(run("compute --in missing_file.json").exit_code == 3);
    CHECK(run("compute").exit_code == 2);                  // missing required option
    CHECK(run("bound --id moby-a2 --in " + nil.path).exit_code == 2);  // missing params
    // wrong operand count for the declared shape
    CHECK(run("bound --id moby-a1 --alpha 2 --beta 0 --in " + nil.path).exit_code == 3);
}

TEST_CASE("repro golden line and exit status") {
    RunResult r = run("repro --scenario quantum");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("omega_comparison 4.000000000000 expected 4 PASS") != std::string::npos);

    r = run("repro --scenario all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("example omega_E") != std::string::npos);
}

TEST_CASE("catalog listings") {
    RunResult r = run("list-bounds");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("modified-kz") != std::string::npos);
    CHECK(r.out.find("total 41 bounds") != std::string::npos);

    r = run("list-lemmas");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("total 13 lemmas") != std::string::npos);
    CHECK(r.out.find("great-a1") != std::string::npos);
}

TEST_CASE("verify produces deterministic reports") {
    RunResult r1 = run(
        "verify --bounds norm-upper,moby-a2,seema9 --ensemble ginibre-complex --dim 3 --count 4 "
        "--seed 11 --grid quick --out cli_rep1.json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("violations 0") != std::string::npos);
    RunResult r2 = run(
        "verify --bounds norm-upper,moby-a2,seema9 --ensemble ginibre-complex --dim 3 --count 4 "
        "--seed 11 --grid quick --out cli_rep2.json");
    CHECK(r2.exit_code == 0);
    CHECK(slurp("cli_rep1.json") == slurp("cli_rep2.json"));
    CHECK(!slurp("cli_rep1.json").empty());
    std::remove("cli_rep1.json");
    std::remove("cli_rep2.json");

    RunResult rc = run(
        "verify --bounds norm-upper --ensemble hermitian --dim 2 --count 3 --seed 1 "
        "--grid quick --out cli_rep.csv --format csv");
    CHECK(rc.exit_code == 0);
    CHECK(slurp("cli_rep.csv").rfind("bound_id,trial,dim,omega_power,bound,slack,holds\n", 0) ==
          0);
    std::remove("cli_rep.csv");
}

TEST_CASE("lemma fuzzing command") {
    RunResult r = run("lemmas --id buzano --trials 500 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("buzano trials 500 violations 0") != std::string::npos);
}
