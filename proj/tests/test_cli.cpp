// End-to-end checks of the command-line front end: exit-code contract,
// JSON/CSV shape, determinism.  Runs the installed binary via popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "test_util.hpp"

#ifndef CONVAV_CLI_BIN
#define CONVAV_CLI_BIN "convav"
#endif

namespace {

std::string run_cli(const std::string& args, int* exit_code) {
    const std::string cmd = std::string(CONVAV_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    const int st = pclose(p);
    *exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

std::string zeros_arg() { return " --zeros " + source_path("data/zeros100.txt"); }

}  // namespace

TEST_CASE("verify exits 0 on pass and 1 on failure") {
    int code = -1;
    const std::string out =
        run_cli("verify prop22 --N 400 --lambda 30 --weight cesaro:3 --tol 1e-8", &code);
    CHECK(code == 0);
    CHECK(out.find("\"identity\":\"prop22\"") != std::string::npos);
    CHECK(out.find("\"pass\":true") != std::string::npos);

    // an unreachable tolerance must fail the check, not silently pass
    const std::string out2 =
        run_cli("verify prop22 --N 400 --lambda 30 --weight cesaro:1.5 --tol 1e-16", &code);
    CHECK(code == 1);
    CHECK(out2.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("verify cor24 runs the d-fold identity") {
    int code = -1;
    const std::string out =
        run_cli("verify cor24 --d 3 --N 200 --lambda 20 --weight cesaro:3 --tol 1e-7", &code);
    CHECK(code == 0);
    CHECK(out.find("\"identity\":\"cor24\"") != std::string::npos);
}

TEST_CASE("precondition violations exit 2") {
    int code = -1;
    run_cli("explicit cesaro --lambda 100 --k 2 --zeros /no/such/file.txt", &code);
    CHECK(code == 2);
    run_cli("explicit mgoldbach --x 3" + zeros_arg(), &code);
    CHECK(code == 2);
    run_cli("verify prop22 --N 100 --lambda 500", &code);  // lambda b > N
    CHECK(code == 2);
    run_cli("verify prop22 --weight fourier:2 --N 100 --lambda 20", &code);
    CHECK(code == 2);
    run_cli("ratio --xmax 10 --step 0", &code);
    CHECK(code == 2);
}

TEST_CASE("K = 0 needs no zeros file and zero sums vanish") {
    int code = -1;
    const std::string out =
        run_cli("explicit cesaro --lambda 100 --k 2 --K 0 --zeros /no/such/file.txt", &code);
    CHECK(code == 0);
    CHECK(out.find("\"M1\":{\"re\":0,\"im\":0}") != std::string::npos);
    CHECK(out.find("\"M2\":{\"re\":0,\"im\":0}") != std::string::npos);
}

TEST_CASE("JSON and CSV shapes") {
    int code = -1;
    const std::string zl = run_cli("explicit zlambda --lambda 10 --w 2 --K 20" + zeros_arg(), &code);
    CHECK(code == 0);
    CHECK(zl.rfind("{\"formula\":\"zlambda\"", 0) == 0);
    CHECK(zl.find("\"growth_envelope_ratio\":") != std::string::npos);

    const std::string csv = run_cli("ratio --xmax 400 --step 100", &code);
    CHECK(code == 0);
    CHECK(csv.rfind("x,ratio_quadratic,ratio_cubic\n", 0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 5);  // header + 4 rows, LF endings

    const std::string dump = run_cli("dump conv --g1 lambda --g2 lambda --N 8", &code);
    CHECK(code == 0);
    CHECK(dump.rfind("n,G_n\n", 0) == 0);

    const std::string sj = run_cli("series exp --y 0.05 --N 800 --K 20" + zeros_arg(), &code);
    CHECK(code == 0);
    CHECK(sj.find("\"formula\":\"goldbach_exp_series\"") != std::string::npos);
}

TEST_CASE("zeros path can come from the environment") {
    int code = -1;
    const std::string cmd = "CONVAV_ZEROS=" + source_path("data/zeros100.txt") +
                            " " CONVAV_CLI_BIN " explicit zlambda --lambda 10 --w 2 --K 30";
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[1024];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    code = WEXITSTATUS(pclose(p));
    CHECK(code == 0);
    CHECK(out.find("\"K\":30") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
    int c1 = -1, c2 = -1;
    const std::string args = "explicit psirl --x 300 --ell 2 --n-max 500 --K 50" + zeros_arg();
    const std::string a = run_cli(args, &c1);
    const std::string b = run_cli(args, &c2);
    CHECK(c1 == 0);
    CHECK(c2 == 0);
    CHECK(a == b);
    CHECK(!a.empty());
}
