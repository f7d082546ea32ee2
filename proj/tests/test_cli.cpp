// End-to-end checks of the installed CLI binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HAMSPHERE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("count subcommands") {
    CHECK(run("count polygon -m 3 -k 2").out == "6\n");
    CHECK(run("count spheres -n 6").out == "195\n");
    CHECK(run("count quad -k 2").out == "20\n");
    auto th = run("count threshold -n 100");
    CHECK(th.out.substr(0, 9) == "0.0535437");
}

TEST_CASE("enumerate and search pipeline with exit codes") {
    auto found = run("sample -n 5 -p 1 | " HAMSPHERE_CLI " search -");
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("FOUND") == 0);

    // tetrahedron plus isolated vertex: NOT_FOUND, exit 1
    auto nf = run("sample -n 4 -p 1 | sed 's/n 4/n 5/' | " HAMSPHERE_CLI " search -");
    CHECK(nf.exit_code == 1);
    CHECK(nf.out.find("NOT_FOUND") == 0);

    auto to = run("sample -n 9 -p 1 | " HAMSPHERE_CLI " search - --node-limit 1");
    CHECK(to.exit_code == 2);
    CHECK(to.out.find("TIMEOUT") == 0);
}

TEST_CASE("enumerate counts") {
    CHECK(run("enumerate polygon -m 4 -k 1 --count-only").out == "5\n");
    CHECK(run("enumerate spheres -n 4 --count-only").out == "1\n");
}

TEST_CASE("sweep reruns are byte-identical") {
    std::string args = "sweep --n 9 --trials 15 --seed 31 --threads 2 --pc-mult 0.5 "
                       "--pc-mult 2";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("n,p,trials,successes,timeouts,phat,ci_low,ci_high,mean_nodes\n") == 0);
}

TEST_CASE("moments subcommand emits the exact report") {
    auto r = run("moments --n 4 --p 1/3");
    CHECK(r.out.find("expected_count=1/81") != std::string::npos);
    CHECK(r.out.find("sphere_count=1") != std::string::npos);
}

TEST_CASE("unknown verify suite fails cleanly") {
    auto r = run("verify --suite nonsense");
    CHECK(r.exit_code == 1);
}
