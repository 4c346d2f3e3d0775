#include "unimod/families.hpp"
#include "unimod/io.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(UNIMOD_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name + ".json";
}

}  // namespace

TEST_CASE("emit then verify round-trips with exit 0") {
    std::string path = temp_path("taft3");
    auto r = run_cli("emit taft --n 3 --emit " + path);
    REQUIRE(r.exit_code == 0);
    auto v = run_cli("verify " + path);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("ok") != std::string::npos);

    // emitted file matches the library emitter byte for byte
    std::ifstream in(path, std::ios::binary);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body == unimod::emit_instance(unimod::instance_of(*unimod::taft(3))));
    std::remove(path.c_str());
}

TEST_CASE("verify: broken antipode exits 3 and names the axiom") {
    unimod::InstanceFile f = unimod::instance_of(*unimod::taft(2));
    f.hopf.antipode.set_col(2, -f.hopf.antipode.col(2));  // flip S(x)
    std::string path = temp_path("broken");
    std::ofstream(path) << unimod::emit_instance(f);
    auto r = run_cli("verify " + path);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("antipode") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("truncated file exits 2") {
    std::string path = temp_path("truncated");
    std::string body = unimod::emit_instance(unimod::instance_of(*unimod::taft(2)));
    std::ofstream(path) << body.substr(0, body.size() / 2);
    auto r = run_cli("verify " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("invariants on taft(2)") {
    std::string path = temp_path("sweedler");
    REQUIRE(run_cli("emit taft --n 2 --emit " + path).exit_code == 0);
    auto r = run_cli("invariants " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("unimodular(H) = false") != std::string::npos);
    CHECK(r.output.find("unimodular(H*) = false") != std::string::npos);
    CHECK(r.output.find("g_H = g") != std::string::npos);
    auto rj = run_cli("invariants " + path + " --json");
    CHECK(rj.exit_code == 0);
    CHECK(rj.output.find("\"unimodular\": false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("decide: verdict goes to stdout as data, exit 0 either way") {
    std::string yes_path = temp_path("trivial_group");
    REQUIRE(run_cli("emit trivial --group z2 --emit " + yes_path).exit_code == 0);
    auto yes = run_cli("decide " + yes_path);
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("verdict = yes") != std::string::npos);
    CHECK(yes.output.find("witness") != std::string::npos);
    std::remove(yes_path.c_str());

    std::string no_path = temp_path("a1_210");
    REQUIRE(run_cli("emit a1 --n 2 --d 1 --xi 0 --emit " + no_path).exit_code == 0);
    auto no = run_cli("decide " + no_path);
    CHECK(no.exit_code == 0);
    CHECK(no.output.find("verdict = no") != std::string::npos);
    std::remove(no_path.c_str());

    auto missing = run_cli("decide " + temp_path("nonexistent"));
    CHECK(missing.exit_code == 2);
}

TEST_CASE("decide a0(3,3) is negative") {
    std::string path = temp_path("a0_33");
    REQUIRE(run_cli("emit a0 --n 3 --d 3 --emit " + path).exit_code == 0);
    auto r = run_cli("decide " + path + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"verdict\": \"no\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("decide without a comodule block exits 2") {
    std::string path = temp_path("hopf_only");
    REQUIRE(run_cli("emit taft --n 2 --emit " + path).exit_code == 0);
    auto r = run_cli("decide " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("survey-taft: N=2 and N=3 all negative; out-of-range N exits 2") {
    auto r2 = run_cli("survey-taft --n 2 --xi 0,1");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("all negative") != std::string::npos);
    // 2 divisors -> 2 A0 rows + 4 A1 rows
    std::size_t rows = 0;
    for (std::size_t pos = 0; (pos = r2.output.find(": no", pos)) != std::string::npos; ++pos)
        ++rows;
    CHECK(rows == 6);

    auto r3 = run_cli("survey-taft --n 3 --xi 0,1,z");
    CHECK(r3.exit_code == 0);
    CHECK(r3.output.find("all negative") != std::string::npos);

    CHECK(run_cli("survey-taft --n 9").exit_code == 2);
}

TEST_CASE("survey-taft runs are deterministic") {
    auto a = run_cli("survey-taft --n 2 --xi 0,1,z,2");
    auto b = run_cli("survey-taft --n 2 --xi 0,1,z,2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("selftest passes, is deterministic, and the corrupt-im flag fails it") {
    auto a = run_cli("selftest");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("FAIL") == std::string::npos);
    // at least 40 checks
    std::size_t checks = 0;
    for (std::size_t pos = 0; (pos = a.output.find("PASS ", pos)) != std::string::npos; ++pos)
        ++checks;
    CHECK(checks >= 40);

    auto b = run_cli("selftest");
    CHECK(a.output == b.output);

    auto c = run_cli("selftest --corrupt-im");
    CHECK(c.exit_code == 1);
    CHECK(c.output.find("FAIL Im simplification") != std::string::npos);
}
