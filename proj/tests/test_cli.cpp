#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  bool merge_stderr = false) {
    std::string dir = std::string("/tmp/domset_cli_test.") + std::to_string(::getpid());
    std::string in_path = dir + ".in";
    {
        std::ofstream f(in_path);
        f << stdin_data;
    }
    std::string cmd = std::string(DOMSET_CLI_PATH) + " " + args + " < " + in_path +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    std::remove(in_path.c_str());
    return r;
}

int line_count(const std::string& s) {
    int c = 0;
    for (char ch : s)
        if (ch == '\n') ++c;
    return c;
}

const char* kP4 = "0 1\n1 2\n2 3\n";

} // namespace

TEST_CASE("cli enumerates the path with every algorithm") {
    for (const char* algo : {"oracle", "general", "triangle-free", "paw-free", "diamond-free", "ktk2"}) {
        CliResult r = run_cli(std::string("--algorithm ") + algo, kP4);
        CHECK(r.exit_code == 0);
        CHECK(line_count(r.out) == 4);
    }
}

TEST_CASE("cli count-only matches the full listing") {
    CliResult full = run_cli("--algorithm general", kP4);
    CliResult count = run_cli("--algorithm general --count-only", kP4);
    CHECK(count.exit_code == 0);
    CHECK(count.out == std::to_string(line_count(full.out)) + "\n");
}

TEST_CASE("cli auto mode picks a class algorithm on bipartite input") {
    CliResult r = run_cli("--count-only", kP4);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("cli dimacs input") {
    CliResult r = run_cli("--format dimacs --algorithm oracle --count-only", "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n"); // P3 has MDS {1} and {0,2}
}

TEST_CASE("cli exit codes") {
    CliResult bad_input = run_cli("--algorithm general", "0 0\n");
    CHECK(bad_input.exit_code == 2);
    CliResult class_err = run_cli("--algorithm triangle-free", "0 1\n1 2\n2 0\n");
    CHECK(class_err.exit_code == 3);
    CliResult bad_algo = run_cli("--algorithm nonsense", kP4);
    CHECK(bad_algo.exit_code == 2);
}

TEST_CASE("cli bicolor file restricts the prescribed set") {
    std::string bic = std::string("/tmp/domset_cli_test.") + std::to_string(::getpid()) + ".bicolor";
    {
        std::ofstream f(bic);
        f << "0\n3\n";
    }
    CliResult r = run_cli("--algorithm general --bicolor " + bic, kP4);
    std::remove(bic.c_str());
    CHECK(r.exit_code == 0);
    // D(P4, {0,3}) = {0,3}, {0,2}, {1,3}, {1,2}
    CHECK(line_count(r.out) == 4);
}

TEST_CASE("cli generation is seeded and deterministic") {
    CliResult a = run_cli("--generate random_bipartite:6,0.5 --seed 3 --algorithm oracle");
    CliResult b = run_cli("--generate random_bipartite:6,0.5 --seed 3 --algorithm oracle");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CliResult kpq = run_cli("--generate complete_multipartite:2,2 --count-only");
    CHECK(kpq.out == "6\n");
}

TEST_CASE("cli sat pipeline") {
    std::string cnf = std::string("/tmp/domset_cli_test.") + std::to_string(::getpid()) + ".cnf";
    {
        std::ofstream f(cnf);
        f << "p cnf 1 1\n1 0\n";
    }
    CliResult inst = run_cli("--sat " + cnf);
    CHECK(inst.exit_code == 0);
    CHECK(inst.out.find("# A neg_x1") != std::string::npos);
    CHECK(inst.out.find("u v") != std::string::npos);
    CliResult feas = run_cli("--sat " + cnf + " --check-extension");
    CHECK(feas.out == "feasible\n");
    {
        std::ofstream f(cnf);
        f << "p cnf 1 2\n1 0\n-1 0\n";
    }
    CliResult infeas = run_cli("--sat " + cnf + " --check-extension");
    CHECK(infeas.out == "infeasible\n");
    std::remove(cnf.c_str());
}
