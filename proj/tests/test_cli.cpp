// Drives the installed CLI binary (path in argv[1]) through its contract:
// output formats, exit codes, usage errors, and determinism.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rnagell/rnagell.hpp"

using namespace rnagell;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::printf("FAIL: %s\n", what.c_str());
        ++g_failures;
    }
}

struct CommandResult {
    int exit_code;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./tools/rnagell";

    // search: text format and determinism.
    const CommandResult s1 = run_command(cli + " search --max-n 15");
    expect(s1.exit_code == 0, "search exits 0");
    expect(s1.out == "(1, 3)\n(3, 4)\n(5, 5)\n(11, 7)\n(181, 15)\n", "search text output");
    const CommandResult s2 = run_command(cli + " search --max-n 15");
    expect(s1.out == s2.out, "identical invocations are byte-identical");

    // search: json output parses back through the engine's reader.
    const CommandResult sj = run_command(cli + " search --max-n 15 --format json");
    expect(sj.exit_code == 0, "search --format json exits 0");
    {
        const Json doc = Json::parse(sj.out);
        expect(doc.is_array() && doc.size() == 5, "search json has five entries");
        expect(solution_of(doc.at(4)) == SolutionPair{181, 15}, "search json round-trips");
    }

    // residues.
    const CommandResult res = run_command(cli + " residues");
    expect(res.exit_code == 0 && res.out == "3 5 13\n", "residues text output");
    const CommandResult resj = run_command(cli + " residues --format json");
    expect(Json::parse(resj.out).get<std::vector<long>>() == std::vector<long>{3, 5, 13},
           "residues json round-trips");

    // theta.
    const CommandResult th = run_command(cli + " theta --m 7");
    expect(th.exit_code == 0, "theta --m 7 exits 0");
    expect(th.out.find("equation_holds = false") != std::string::npos,
           "theta --m 7 reports a failed equation");
    const CommandResult thj = run_command(cli + " theta --m 13 --format json");
    {
        const ThetaWitness w = theta_witness_of(Json::parse(thj.out));
        expect(w.equation_holds && w.trace == -181, "theta json round-trips");
    }

    // valuation: both modes, text and json.
    const CommandResult v1 = run_command(cli + " valuation --p 7 --n 42");
    expect(v1.exit_code == 0 && v1.out == "v_7(42) = 1\n", "valuation --p --n output");
    const CommandResult v0 = run_command(cli + " valuation --p 7 --n 0");
    expect(v0.out == "v_7(0) = infinity\n", "valuation of zero prints infinity");
    const CommandResult vb = run_command(cli + " valuation --b-sum 42");
    expect(vb.out == "v_7(B_42) = 1\nv_7(42) = 1\n", "valuation --b-sum output");
    const CommandResult vj = run_command(cli + " valuation --p 7 --n 0 --format json");
    expect(valuation_of(Json::parse(vj.out).at("v")).is_infinite(),
           "valuation json round-trips infinity");

    // usage errors exit 2 and are never ignored.
    expect(run_command(cli + " search --max-n 15 --bogus 1").exit_code == 2,
           "unknown flag is a usage error");
    expect(run_command(cli + " search").exit_code == 2, "missing required flag");
    expect(run_command(cli + " search --max-n 0").exit_code == 2, "non-positive bound");
    expect(run_command(cli + " theta --m 4").exit_code == 2, "even m is rejected");
    expect(run_command(cli + " valuation --p 6 --n 5").exit_code == 2, "non-prime p");
    expect(run_command(cli + " valuation --p 7 --n 5 --b-sum 3").exit_code == 2,
           "exclusive valuation modes");
    expect(run_command(cli + " valuation").exit_code == 2, "valuation without a mode");
    expect(run_command(cli + " nonsense").exit_code == 2, "unknown subcommand");

    // verify: certificate file, exit code, determinism across runs.
    const CommandResult ver =
        run_command(cli + " verify --max-n 20 --k-max 2 --d-sweep 50 --out cli_cert_a.json");
    expect(ver.exit_code == 0 && ver.out == "PASS\n", "verify exits 0 with PASS");
    run_command(cli + " verify --max-n 20 --k-max 2 --d-sweep 50 --out cli_cert_b.json");
    expect(!slurp("cli_cert_a.json").empty() &&
               slurp("cli_cert_a.json") == slurp("cli_cert_b.json"),
           "verify output is byte-identical across runs");
    {
        const Json doc = Json::parse(slurp("cli_cert_a.json"));
        expect(doc.at("status") == "PASS", "emitted certificate records PASS");
        expect(reverify(doc).pass, "emitted certificate re-verifies");
    }

    if (g_failures > 0) {
        std::printf("%d CLI check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
