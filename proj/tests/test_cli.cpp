#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CPART_CLI_PATH
#define CPART_CLI_PATH "cpart"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "/tmp/cpart_cli_out.txt";
    std::string cmd = std::string(CPART_CLI_PATH) + " " + args + " > " + out_file +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

std::string last_line(const std::string& s) {
    std::istringstream in(s);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    return last;
}

}  // namespace

TEST_CASE("count subcommand emits the exact small values") {
    RunResult r = run_cli("count --kind pr --r 1 --n 10");
    REQUIRE(r.code == 0);
    CHECK(last_line(r.out) == "10,5,1.6094379124341");
}

TEST_CASE("constants subcommand emits the headline constant") {
    RunResult r = run_cli("constants");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"mertens_M\": 0.26149721") != std::string::npos);
}

TEST_CASE("predict matches the library composition") {
    RunResult r = run_cli("predict --kind pr --r 1 --n 10000");
    REQUIRE(r.code == 0);
    std::string last = last_line(r.out);
    double v = std::strtod(last.c_str() + last.find(',') + 1, nullptr);
    CHECK(v == doctest::Approx(113.363458314092).epsilon(1e-9));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("predict --kind pr --r 1").code == 2);        // missing --n
    CHECK(run_cli("nonsense").code == 2);                       // unknown subcommand
    CHECK(run_cli("predict --kind banana --r 1 --n 100").code == 2);
}

TEST_CASE("numeric contract violations exit with code 3") {
    // Lambda predictor has no closed form for r = 4
    CHECK(run_cli("predict --kind lambda --r 4 --n 1000").code == 3);
}

TEST_CASE("domainplot writes a deterministic ppm") {
    std::string p1 = "/tmp/cpart_cli_a.ppm", p2 = "/tmp/cpart_cli_b.ppm";
    REQUIRE(run_cli("domainplot --r 1 --prime-bound 20 --res 64 --out " + p1).code == 0);
    REQUIRE(run_cli("domainplot --r 1 --prime-bound 20 --res 64 --out " + p2).code == 0);
    std::ifstream a(p1, std::ios::binary), b(p2, std::ios::binary);
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().size() == 13 + 64 * 64 * 3);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}
