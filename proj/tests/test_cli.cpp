#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const std::string base = "rescool_cli_test_" + std::to_string(++counter);
    const std::string cmd = env + " " RESCOOL_CLI_PATH " " + args + " >" + base + ".out 2>" + base + ".err";
    Run r;
    const int status = std::system(cmd.c_str());
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return r;
}

double value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size()));
}

}  // namespace

TEST_CASE("sweep finds the AKLT resonance") {
    auto r = run("sweep --model aklt1 --init 1100 --range 0.8:1.2 --points 100 --c 0.05 --tau 31.4");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("epsilon0,probability,stderr,shots\n", 0) == 0);
    CHECK(std::abs(value_after(r.err, "estimated E1=")) <= 0.005);
}

TEST_CASE("sweep on the four-level diagonal model") {
    auto r = run("sweep --model diag:0.3,2,3,5 --init 00 --range 1.0:1.6 --points 121");
    REQUIRE(r.code == 0);
    CHECK(std::abs(value_after(r.err, "peak epsilon0=") - 1.3) <= 0.005);
}

TEST_CASE("zero coupling exits with the flat-curve code") {
    auto r = run("sweep --model aklt1 --init 1100 --c 0");
    CHECK(r.code == 3);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("post-selected cooling reports the final fidelity") {
    auto r = run("cool --model aklt1 --init 1100 --epsilon0 1 --c 0.05 --iters 2 --mode post-selected --target-known");
    REQUIRE(r.code == 0);
    CHECK(value_after(r.err, "final fidelity=") >= 0.999);
    CHECK(r.out.find("iteration k=2 outcome=excited") != std::string::npos);
}

TEST_CASE("stochastic output is byte identical for a fixed seed") {
    const std::string args = "cool --model aklt1 --init 1100 --auto-epsilon --iters 2 --mode stochastic --seed 5";
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto env = run("cool --model aklt1 --init 1100 --auto-epsilon --iters 2 --mode stochastic --seed 1", "RC_SEED=5");
    CHECK(env.out == a.out);
}

TEST_CASE("bad input exits with code 2") {
    CHECK(run("sweep --points notanumber").code == 2);
    CHECK(run("cool --mode sometimes").code == 2);
    CHECK(run("cool --model diag:0,1,2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --only nosuchcheck").code == 2);
}

TEST_CASE("restart cap exit code") {
    auto r = run("cool --model diag:0,3 --init 1 --epsilon0 1 --iters 3 --mode stochastic --restart-cap 2");
    CHECK(r.code == 4);
}

TEST_CASE("verify runs a single group") {
    auto r = run("verify --only trotter");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] 8 trotter") != std::string::npos);
}

TEST_CASE("config file supplies defaults that flags override") {
    const std::string path = "rescool_cli_test.cfg";
    {
        std::ofstream cfg(path);
        cfg << "# cooling defaults\nmodel = aklt1\ninit = 1100\nauto-epsilon = true\niters = 2\nmode = stochastic\nseed = 5\n";
    }
    auto direct = run("cool --model aklt1 --init 1100 --auto-epsilon --iters 2 --mode stochastic --seed 5");
    auto from_file = run("cool --config " + path);
    REQUIRE(from_file.code == 0);
    CHECK(from_file.out == direct.out);
    auto overridden = run("cool --config " + path + " --iters 1");
    CHECK(overridden.out.find("iterations=1") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run("cool --config does_not_exist.cfg").code == 2);
}
