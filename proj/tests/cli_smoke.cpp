// Drives the built CLI binary end to end: exit codes, output shapes,
// deterministic JSON, sweep idempotence. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string tmp = "cli_smoke_out.tmp";
    const std::string cmd = g_cli + " " + args + " > " + tmp + " 2>cli_smoke_err.tmp";
    const int status = std::system(cmd.c_str());
    std::ifstream file(tmp);
    std::stringstream buf;
    buf << file.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        std::printf("FAIL: %s\n", what.c_str());
        ++g_failures;
    }
}

void expect_contains(const std::string& hay, const std::string& needle, const std::string& what) {
    expect(hay.find(needle) != std::string::npos, what + " (looking for '" + needle + "')");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_smoke <path-to-circroute>\n");
        return 2;
    }
    g_cli = argv[1];

    RunResult table = run("report --n 25 --s 5 --format table");
    expect(table.exit_code == 0, "report (25,5) exits 0");
    expect_contains(table.out, "TIGHT", "tight bracket marked in the table");
    expect_contains(table.out, "max_arc=15", "all-equal loads shown");

    RunResult json1 = run("report --n 12 --s 3 --format json");
    RunResult json2 = run("report --n 12 --s 3 --format json");
    expect(json1.exit_code == 0, "report json exits 0");
    expect(json1.out == json2.out, "json report is byte-identical across runs");
    expect_contains(json1.out, "\"lemma7\": 7", "json carries lemma7 = 7");
    expect_contains(json1.out, "\"num\"", "rationals rendered as num/den/approx");
    expect_contains(json1.out, "\"sumf\": 34", "palette size serialized");

    RunResult bad = run("report --n 12 --s 6");
    expect(bad.exit_code == 2, "report (12,6) exits 2");
    RunResult bad2 = run("report --n 4 --s 2");
    expect(bad2.exit_code == 2, "report (4,2) exits 2");
    RunResult usage = run("report --s 3");
    expect(usage.exit_code == 2, "missing --n exits 2");

    RunResult verify = run("verify --n 7 --s 2 --suite all");
    expect(verify.exit_code == 0, "verify (7,2) all passes");
    expect_contains(verify.out, "PASS", "verify prints PASS");
    RunResult verify_na = run("verify --n 34 --s 10 --suite lattice");
    expect(verify_na.exit_code == 0, "verify (34,10) lattice passes");
    expect_contains(verify_na.out, "NotApplicable", "NotApplicable note printed");
    RunResult verify_big = run("verify --n 5000 --s 2 --suite routing");
    expect(verify_big.exit_code == 2, "verify above the ceiling exits 2");

    RunResult route = run("route --n 12 --s 3 --from 4 --to 9");
    expect(route.exit_code == 0, "route exits 0");
    expect_contains(route.out, "path: 4,7,10,9", "construction-1 path printed");
    expect_contains(route.out, "i=2 j=-1", "path class printed");
    RunResult route_bad = run("route --n 12 --s 3 --from 4 --to 4");
    expect(route_bad.exit_code == 2, "route x==y exits 2");

    RunResult colour = run("colour --n 7 --s 2 --variant arc");
    expect(colour.exit_code == 0, "colour exits 0");
    expect_contains(colour.out, "# conflict_free: true", "conflict check reported");
    expect_contains(colour.out, "# distinct_colours: 12", "distinct count reported");
    RunResult colour_edge = run("colour --n 7 --s 2 --variant edge");
    expect_contains(colour_edge.out, "# distinct_colours: 20", "edge palette reported");

    RunResult sweep1 = run("sweep --n 5..30 --out sweep1.csv");
    RunResult sweep2 = run("sweep --n 5..30 --out sweep2.csv");
    expect(sweep1.exit_code == 0, "sweep exits 0");
    {
        std::ifstream f1("sweep1.csv"), f2("sweep2.csv");
        std::stringstream b1, b2;
        b1 << f1.rdbuf();
        b2 << f2.rdbuf();
        expect(!b1.str().empty() && b1.str() == b2.str(), "sweep is idempotent");
        expect_contains(b1.str(), "# circroute-schema v1", "schema comment present");
        long long rows = -2;  // schema line + header line
        std::string line;
        std::stringstream counter(b1.str());
        while (std::getline(counter, line))
            if (!line.empty()) ++rows;
        expect(rows == 182, "5..30 sweep has 182 data rows (one per valid pair), got " +
                                std::to_string(rows));
        expect_contains(b1.str(), "25,5,5,0,ok", "(25,5) row present");
    }
    RunResult sweep_jobs = run("sweep --n 40..44 --s 2,3,5 --jobs 3 --out sweep3.csv");
    expect(sweep_jobs.exit_code == 0, "parallel sweep exits 0");
    {
        std::ifstream f3("sweep3.csv");
        std::string line;
        std::getline(f3, line);  // schema
        std::getline(f3, line);  // header
        int count = 0;
        long long prev_n = 0, prev_s = 0;
        bool ordered = true;
        while (std::getline(f3, line)) {
            long long n = 0, s = 0;
            std::sscanf(line.c_str(), "%lld,%lld", &n, &s);
            if (std::pair(n, s) <= std::pair(prev_n, prev_s)) ordered = false;
            prev_n = n;
            prev_s = s;
            ++count;
        }
        expect(ordered, "parallel sweep rows are in lexicographic (n,s) order");
        expect(count == 15, "restricted sweep row count is 15, got " + std::to_string(count));
    }
    RunResult sweep_badpath = run("sweep --n 5..6 --out /nonexistent-dir/x.csv");
    expect(sweep_badpath.exit_code == 2, "unwritable sweep output exits 2");

    std::remove("sweep1.csv");
    std::remove("sweep2.csv");
    std::remove("sweep3.csv");
    std::remove("cli_smoke_out.tmp");
    std::remove("cli_smoke_err.tmp");

    if (g_failures) {
        std::printf("%d failures\n", g_failures);
        return 1;
    }
    std::printf("all cli checks passed\n");
    return 0;
}
