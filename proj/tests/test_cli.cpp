#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "hylag/enumeration.hpp"
#include "hylag/graph_io.hpp"
#include "hylag/hypergraph.hpp"

using namespace hylag;

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HYLAG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

std::string tmp_path(const std::string& name) { return "/tmp/hylag_cli_" + name; }

}  // namespace

TEST_CASE("gen colex prints edge count and degree-square sum") {
    auto res = run("gen colex --r 2 --m 4 --out " + tmp_path("c42.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("P2=18") != std::string::npos);
    CHECK(res.out.find("edges=4") != std::string::npos);
    Hypergraph g = read_graph_json(tmp_path("c42.json"));
    CHECK(g == colex_segment(4, 2));
}

TEST_CASE("gen clique and counterexample") {
    auto res = run("gen clique --r 3 --t 4 --out " + tmp_path("k43.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("edges=4") != std::string::npos);

    auto cex = run("gen counterexample --r 4 --t 20 --s 4 --out " + tmp_path("cex.json"));
    CHECK(cex.exit_code == 0);
    CHECK(cex.out.find("edges=4696") != std::string::npos);

    auto ip = run("gen ipattern --r 4 --t 10 --i 2 --tail-colex 4 --out " + tmp_path("ip.json"));
    CHECK(ip.exit_code == 0);
    Hypergraph g = read_graph_json(tmp_path("ip.json"));
    CHECK(g.edge_count() == binomial(10, 4) - binomial(8, 2) + 4);
}

TEST_CASE("gen without --out is a usage error") {
    CHECK(run("gen colex --r 2 --m 4").exit_code == 1);
    CHECK(run("gen colex --r 2").exit_code == 1);        // missing required
    CHECK(run("gen colex --r 2 --m -3 --out /tmp/x").exit_code == 1);
}

TEST_CASE("lagrangian summary and report") {
    run("gen clique --r 3 --t 4 --out " + tmp_path("k43.json"));
    auto res = run("lagrangian " + tmp_path("k43.json") + " --out " + tmp_path("k43_rep.json"));
    CHECK(res.exit_code == 0);
    REQUIRE(res.out.rfind("lambda=", 0) == 0);
    double lambda = std::stod(res.out.substr(7));
    CHECK(lambda == doctest::Approx(0.0625).epsilon(1e-9));
    CHECK(res.out.find("converged=true") != std::string::npos);

    SolveReport rep = read_solve_report_json(tmp_path("k43_rep.json"));
    CHECK(rep.lambda_estimate == doctest::Approx(0.0625).epsilon(1e-9));

    // empty graph solves to zero
    write_graph_json(Hypergraph(3, 4, {}), tmp_path("empty.json"));
    auto zero = run("lagrangian " + tmp_path("empty.json"));
    CHECK(zero.out.rfind("lambda=0 ", 0) == 0);

    CHECK(run("lagrangian /nonexistent.json").exit_code == 1);
}

TEST_CASE("p2 command") {
    run("gen colex --r 2 --m 4 --out " + tmp_path("c42.json"));
    auto res = run("p2 " + tmp_path("c42.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("P2=18") != std::string::npos);

    write_text_file(tmp_path("broken.json"), "{\"r\": 2}");
    CHECK(run("p2 " + tmp_path("broken.json")).exit_code == 1);
}

TEST_CASE("gen lex matches the library segment") {
    auto res = run("gen lex --r 2 --s 4 --t 6 --out " + tmp_path("star.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("P2=20") != std::string::npos);
    CHECK(read_graph_json(tmp_path("star.json")) == lex_segment(4, 2, 6));
}

TEST_CASE("enumerate streams graphs") {
    auto res = run("enumerate --r 2 --m 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"edges\": [[1, 2], [1, 3], [2, 3]]") != std::string::npos);
    CHECK(res.out.find("\"edges\": [[1, 2], [1, 3], [1, 4]]") != std::string::npos);

    // every emitted line parses back to a valid graph; --n-max caps labels
    auto capped = run("enumerate --r 3 --m 4 --n-max 6");
    CHECK(capped.exit_code == 0);
    std::istringstream lines(capped.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        Hypergraph g = parse_graph_json(line);
        CHECK(g.edge_count() == 4);
        CHECK(g.n() <= 6);
        ++count;
    }
    CHECK(count == static_cast<int>(left_compressed_graphs(3, 4, 6).size()));
}

TEST_CASE("ffcheck enumeration mode emits a verdict row") {
    auto res = run("ffcheck --r 2 --m 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("r,t,i,s,m,lambda_colex,lambda_candidate,margin,kkt_colex,"
                       "kkt_candidate,status,seed") != std::string::npos);
    CHECK(res.out.find("colex_best") != std::string::npos);

    auto res3 = run("ffcheck --r 3 --m 4");
    CHECK(res3.exit_code == 0);
    CHECK(res3.out.find("colex_best") != std::string::npos);
}

TEST_CASE("ffcheck refuses infeasible enumeration") {
    auto res = run("ffcheck --r 4 --m 100");
    CHECK(res.exit_code == 2);
    auto res5 = run("ffcheck --r 5 --m 3");
    CHECK(res5.exit_code == 2);
}

TEST_CASE("ffcheck targeted sweep rows and threads") {
    const std::string out = tmp_path("sweep_small.csv");
    auto res = run("ffcheck --targeted --r 4 --s 4 --t-from 15 --t-to 17 --tol 1e-10 "
                   "--restarts 2 --threads 2 --out " + out);
    CHECK(res.exit_code == 0);
    std::string text = read_text_file(out);
    CHECK(text.find("4,15,2,4,1291,") != std::string::npos);
    CHECK(text.find("4,16,2,4,1733,") != std::string::npos);
    CHECK(text.find("4,17,2,4,2279,") != std::string::npos);

    // thread count must not change the bytes (modulo the argv echo)
    const std::string out1 = tmp_path("sweep_small_1t.csv");
    run("ffcheck --targeted --r 4 --s 4 --t-from 15 --t-to 17 --tol 1e-10 "
        "--restarts 2 --threads 1 --out " + out1);
    auto strip_manifest = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    CHECK(strip_manifest(read_text_file(out)) == strip_manifest(read_text_file(out1)));
}

TEST_CASE("verify suites and exit codes") {
    CHECK(run("verify example51").exit_code == 0);
    CHECK(run("verify example51").out.find("18 vs 20: PASS") != std::string::npos);
    CHECK(run("verify props --a2 --s 4 --r 2 --t 6").exit_code == 0);
    CHECK(run("verify props --a1 --s 496 --r 2 --t 1000").exit_code == 0);
    CHECK(run("verify props --a1 --s 4 --r 2 --t 1000").exit_code == 2);  // out of range
    CHECK(run("verify props --s 4 --r 2 --t 6").exit_code == 1);          // no inequality picked
    CHECK(run("verify remark33 --t 6 --r 3").exit_code == 0);
    CHECK(run("verify thm51 --t 12 --r 4 --i 2 --s 4").exit_code == 0);
    CHECK(run("verify nonsense").exit_code == 1);
}

TEST_CASE("byte-identical reruns") {
    const std::string rep = tmp_path("det_rep.json");
    run("gen colex --r 3 --m 9 --out " + tmp_path("det_g.json"));
    run("lagrangian " + tmp_path("det_g.json") + " --seed 5 --out " + rep);
    std::string first = read_text_file(rep);
    run("lagrangian " + tmp_path("det_g.json") + " --seed 5 --out " + rep);
    CHECK(read_text_file(rep) == first);

    // rerun re-executes the embedded argv and reproduces the bytes
    auto rr = run("rerun " + rep);
    CHECK(rr.exit_code == 0);
    CHECK(read_text_file(rep) == first);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("--definitely-not-a-flag").exit_code == 1);
    CHECK(run("lagrangian").exit_code == 1);
    CHECK(run("ffcheck --r 2").exit_code == 1);  // no --m, not targeted
}
