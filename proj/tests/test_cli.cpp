// End-to-end checks of the installed command surface. Runs the real binary
// (path from $LATSEC_CLI) and inspects stdout plus exit codes.
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("LATSEC_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "LATSEC_CLI must point at the binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = "/tmp/latsec_test_" + name;
    std::ofstream f(path);
    f << contents;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate a repetition code") {
    const std::string path = write_temp("rep3.txt", "3 1\n111\n");
    const RunResult r = run("enumerate " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 1\n3 1\n");
}

TEST_CASE("enumerate the [6,3,3] example code") {
    const std::string path =
        write_temp("ex1.txt", "6 3\n111000\n100110\n010101\n");
    const RunResult r = run("enumerate " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 1\n3 4\n4 3\n");
}

TEST_CASE("length beyond 64 columns is a usage error") {
    std::string row(65, '1');
    const std::string path = write_temp("wide.txt", "65 1\n" + row + "\n");
    const RunResult r = run("enumerate " + path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("dimension above the exhaustive limit is a domain error") {
    std::string body = "64 30\n";
    for (int i = 0; i < 30; ++i) {
        std::string row(64, '0');
        row[i] = '1';
        body += row + "\n";
    }
    const std::string path = write_temp("k30.txt", body);
    CHECK(run("enumerate " + path).exit_code == 1);
}

TEST_CASE("macwilliams command") {
    const std::string path = write_temp("rep3_enum.txt", "0 1\n3 1\n");
    const RunResult r = run("macwilliams " + path + " --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 1\n2 3\n");
}

TEST_CASE("classify command") {
    const std::string path =
        write_temp("ex1b.txt", "6 3\n111000\n100110\n010101\n");
    const RunResult r = run("classify " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "formally_self_dual_odd\n");
}

TEST_CASE("secrecy report from the catalog") {
    const RunResult r = run("secrecy --catalog n6_ofsd_d3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "xi 1.17157287525"));
    CHECK(contains(r.out, "conjecture_verified true"));
    CHECK(!contains(r.out, "gleason"));  // odd code: no decomposition block
}

TEST_CASE("secrecy report for an even entry includes the Gleason block") {
    const RunResult r = run("secrecy --catalog n18_efsd_d6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-29/16 27/8 -9/16"));
    CHECK(contains(r.out, "= 81/32"));
    CHECK(contains(r.out, "positive (gain attained at tau=1)"));
    CHECK(contains(r.out, "xi 2.4854368932"));
}

TEST_CASE("secrecy rejects a non-fsd source without --weak-only") {
    const std::string path = write_temp("rep3c.txt", "0 1\n3 1\n");
    CHECK(run("secrecy --enum " + path + " --k 1").exit_code == 1);
    const RunResult weak = run("secrecy --enum " + path + " --k 1 --weak-only");
    CHECK(weak.exit_code == 0);
    CHECK(contains(weak.out, "xi_at_tau1"));
}

TEST_CASE("secrecy from an enumerator file whose top coefficient vanishes") {
    const std::string path = write_temp("ex1_enum.txt", "0 1\n3 4\n4 3\n");
    const RunResult r = run("secrecy --enum " + path + " --n 6 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "xi 1.17157287525"));
    // without --n the length is misread and the input is not fsd
    CHECK(run("secrecy --enum " + path + " --k 3").exit_code == 1);
}

TEST_CASE("gleason from an enumerator file") {
    const std::string path =
        write_temp("n10_enum.txt", "0 1\n4 15\n6 15\n10 1\n");
    const RunResult r = run("gleason --enum " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "gleason a_r = -1/4 5/4"));
    CHECK(contains(r.out, "= 5/4"));
}

TEST_CASE("catalog entry n6_efsd_d2 reports gain 1") {
    const RunResult r = run("secrecy --catalog n6_efsd_d2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "xi 1\n"));
    CHECK(contains(r.out, "conjecture_verified false"));
}

TEST_CASE("table reproduces every row and exits 0") {
    const RunResult r = run("table");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n,kind,d,xi_computed,xi_paper,match"));
    CHECK(contains(r.out, "8,sd,4,1.33333333333,1.333,true"));
    CHECK(contains(r.out, "70,ofsd,13,128.368385203,128.368,true"));
    CHECK(!contains(r.out, "false"));
    // byte-identical on a second run
    CHECK(run("table").out == r.out);
}

TEST_CASE("table shows the Type I / Type II ordering at n = 40") {
    const RunResult r = run("table");
    CHECK(contains(r.out, "40,sd,8,11.9766081871,11.977,true"));
    CHECK(contains(r.out, "40,sd,8,12.1904761905,12.191,true"));
}

TEST_CASE("plot-data emits a symmetric curve for E8") {
    const RunResult r = run(
        "plot-data --catalog n8_sd_d4 --tau-min 0.1 --tau-max 10 --points 101");
    CHECK(r.exit_code == 0);
    std::vector<double> xi;
    std::size_t start = r.out.find('\n') + 1;
    while (start < r.out.size()) {
        const std::size_t end = r.out.find('\n', start);
        const std::string line = r.out.substr(start, end - start);
        xi.push_back(std::stod(line.substr(line.rfind(',') + 1)));
        start = end + 1;
    }
    REQUIRE(xi.size() == 101);
    double peak = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        CHECK(std::abs(xi[i] - xi[100 - i]) < 1e-9);
        peak = std::max(peak, xi[i]);
    }
    CHECK(std::abs(peak - 4.0 / 3.0) < 1e-4);  // grid hits tau = 1 exactly
}

TEST_CASE("plot-data with points=1 emits a single row at tau_min") {
    const RunResult r = run(
        "plot-data --catalog n8_sd_d4 --tau-min 0.5 --tau-max 2 --points 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\n0.5,"));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("plot-data range violations are usage errors") {
    CHECK(run("plot-data --catalog n8_sd_d4 --tau-min 0.0001 --tau-max 1")
              .exit_code == 2);
    CHECK(run("plot-data --catalog n8_sd_d4 --tau-min 2 --tau-max 1")
              .exit_code == 2);
}

TEST_CASE("tailbite command on the worked example") {
    const RunResult r = run("tailbite --conv 7,5 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1110110000"));
    CHECK(contains(r.out, "isodual true"));
    CHECK(contains(r.out, "conjecture_verified true"));
}

TEST_CASE("tailbite accepts small and wrapped cases") {
    const RunResult a = run("tailbite --conv 3,1 --k 2");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.out, "isodual true"));
    const RunResult b = run("tailbite --conv 7,5 --k 4");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.out, "isodual true"));
}

TEST_CASE("tailbite rejects k < m+1 as a domain error") {
    CHECK(run("tailbite --conv 7,5 --k 2").exit_code == 1);
}

TEST_CASE("validate-catalog passes") {
    const RunResult r = run("validate-catalog");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n8_sd_d4 pass"));
    CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("csv format variants") {
    const RunResult r = run("--format csv secrecy --catalog n8_sd_d4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "field,value"));
    CHECK(contains(r.out, "xi,1.33333333333"));
    const RunResult v = run("--format csv validate-catalog");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "name,sum,macwilliams,distance,kind,ok"));
    CHECK(contains(v.out, "n8_sd_d4,1,1,1,1,true"));
}

TEST_CASE("unknown subcommands and missing options are usage errors") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("secrecy").exit_code == 2);
    CHECK(run("secrecy --catalog no_such_entry").exit_code == 1);
}
