#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hylag/graph_io.hpp"
#include "hylag/manifest.hpp"
#include "hylag/rng.hpp"
#include "oracles.hpp"

using namespace hylag;

TEST_CASE("graph json round trip") {
    Rng rng(61);
    for (int iter = 0; iter < 50; ++iter) {
        int r = 2 + static_cast<int>(rng.next_below(3));
        int n = r + static_cast<int>(rng.next_below(6));
        auto g = oracles::random_graph(rng, r, n, static_cast<std::int64_t>(rng.next_below(12)));
        std::string text = graph_to_json(g);
        Hypergraph back = parse_graph_json(text);
        CHECK(back == g);
        CHECK(graph_to_json(back) == text);  // printer-parser fixpoint
    }
}

TEST_CASE("graph json format details") {
    std::string text = graph_to_json(colex_segment(4, 2));
    CHECK(text == "{\"r\": 2, \"n\": 4, \"edges\": [[1, 2], [1, 3], [1, 4], [2, 3]]}\n");
    // extra keys such as the manifest are tolerated on input
    Hypergraph g = parse_graph_json(
        "{\"r\": 2, \"n\": 3, \"edges\": [[1,2]], \"manifest\": {\"argv\": []}}");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("graph json rejects malformed content") {
    CHECK_THROWS_AS((void)parse_graph_json("not json"), InputError);
    CHECK_THROWS_AS((void)parse_graph_json("{\"r\": 2}"), InputError);
    CHECK_THROWS_AS((void)parse_graph_json("{\"r\": 2, \"n\": 3, \"edges\": [[2,1]]}"), InputError);
    CHECK_THROWS_AS((void)parse_graph_json("{\"r\": 2, \"n\": 3, \"edges\": [[1,2],[1,2]]}"),
                    InputError);
}

TEST_CASE("solve report round trip preserves the recompute invariant") {
    Hypergraph g = colex_segment(6, 2);
    SolverConfig cfg;
    cfg.restarts = 2;
    SolveReport rep = solve_lagrangian(g, cfg);
    std::string text = solve_report_to_json(rep);
    SolveReport back = parse_solve_report_json(text);
    CHECK(back.lambda_estimate == rep.lambda_estimate);
    CHECK(back.weighting.values() == rep.weighting.values());
    CHECK(back.kkt_residual == rep.kkt_residual);
    CHECK(back.converged == rep.converged);
    CHECK(back.seed == rep.seed);
    CHECK(solve_report_to_json(back) == text);
    // lambda still equals the recomputed polynomial value after parsing
    CHECK(polynomial_value(g, back.weighting) == back.lambda_estimate);
}

TEST_CASE("manifest embedding and extraction") {
    RunManifest mf;
    mf.argv = {"gen", "colex", "--r", "2", "--m", "4"};
    mf.seed = 17;
    mf.inputs = {};
    mf.outputs = {"out \"x\".json"};
    std::string graph_file = graph_to_json(colex_segment(4, 2), mf.to_embedded_json());
    std::string extracted = extract_manifest_json(graph_file);
    CHECK(!extracted.empty());
    // extraction through the JSON parser may normalize whitespace
    bool has_seed = extracted.find("\"seed\": 17") != std::string::npos ||
                    extracted.find("\"seed\":17") != std::string::npos;
    CHECK(has_seed);

    std::string csv = "# manifest: " + mf.to_embedded_json() + "\nheader\n1,2\n";
    CHECK(extract_manifest_json(csv) == mf.to_embedded_json());

    CHECK(extract_manifest_json("{\"r\": 2, \"n\": 2, \"edges\": []}").empty());
}

TEST_CASE("float formatting") {
    CHECK(fmt_double(0.0625) == "0.0625");
    CHECK(fmt_double(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_double_exact(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("file io") {
    const std::string path = "/tmp/hylag_io_test.json";
    write_graph_json(clique(4, 2), path);
    CHECK(read_graph_json(path) == clique(4, 2));
    CHECK_THROWS_AS((void)read_text_file("/nonexistent/file"), InputError);
}
