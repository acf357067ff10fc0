#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hylag/hypergraph.hpp"
#include "hylag/ipattern.hpp"
#include "hylag/rng.hpp"
#include "oracles.hpp"

using namespace hylag;

TEST_CASE("binomial basics and overflow detection") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(98, 2) == 4753);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(62, 31) > 0);
    CHECK_THROWS_AS((void)binomial(80, 40), std::overflow_error);
    CHECK_THROWS_AS((void)checked_pow(10, 40), std::overflow_error);
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(Hypergraph(2, 1, {}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{2, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{1, 5}}), InputError);
    CHECK_THROWS_AS(Hypergraph(2, 4, {{1, 2}, {1, 2}}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2}}), InputError);
    Hypergraph g(2, 4, {{2, 3}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});  // canonical order
    CHECK(g.support() == std::vector<Vertex>{1, 2, 3});
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("colex rank examples and oracle agreement") {
    CHECK(colex_rank({1, 2}) == 0);
    CHECK(colex_rank({2, 4}) == 4);
    CHECK(colex_rank({1, 3}) == 1);
    CHECK_THROWS_AS((void)colex_rank({3, 2}), InputError);

    for (int r : {2, 3, 4}) {
        auto ordered = oracles::colex_order_oracle(10, r);
        for (std::size_t k = 0; k < ordered.size(); ++k)
            CHECK(colex_rank(ordered[k]) == static_cast<std::int64_t>(k));
    }
}

TEST_CASE("colex unrank inverts rank") {
    Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int r = 2 + static_cast<int>(rng.next_below(4));
        Edge e;
        Vertex v = 0;
        for (int j = 0; j < r; ++j) {
            v += 1 + static_cast<Vertex>(rng.next_below(5));
            e.push_back(v);
        }
        CHECK(colex_unrank(colex_rank(e), r) == e);
    }
}

TEST_CASE("colex segment examples") {
    CHECK(colex_segment(1, 2) == Hypergraph(2, 2, {{1, 2}}));
    CHECK(colex_segment(4, 2) == Hypergraph(2, 4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
    for (int r : {2, 3})
        for (int k = r; k <= 6; ++k) CHECK(colex_segment(binomial(k, r), r) == clique(k, r));
    CHECK(colex_segment(0, 3).edge_count() == 0);
}

TEST_CASE("rank/segment round trip") {
    for (int r = 2; r <= 5; ++r) {
        Hypergraph seg = colex_segment(10000, r);
        const auto& edges = seg.edges();
        // stored order is lexicographic; ranks must hit 0..m-1 exactly once
        std::vector<bool> seen(10000, false);
        for (const Edge& e : edges) {
            std::int64_t rank = colex_rank(e);
            REQUIRE(rank >= 0);
            REQUIRE(rank < 10000);
            CHECK(!seen[static_cast<std::size_t>(rank)]);
            seen[static_cast<std::size_t>(rank)] = true;
        }
    }
}

TEST_CASE("lex segment examples and comparator oracle") {
    CHECK(lex_segment(4, 2, 6) == Hypergraph(2, 6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
    CHECK(lex_segment(1, 3, 5) == Hypergraph(3, 5, {{1, 2, 3}}));
    CHECK(lex_segment(binomial(6, 3), 3, 6) == clique(6, 3));
    CHECK_THROWS_AS((void)lex_segment(100, 2, 5), RangeError);

    // generation order agrees with the min-symmetric-difference comparator
    auto universe = oracles::all_subsets(7, 3);
    std::sort(universe.begin(), universe.end(), oracles::lex_less_oracle);
    Hypergraph seg = lex_segment(12, 3, 7);
    std::vector<Edge> first(universe.begin(), universe.begin() + 12);
    std::sort(first.begin(), first.end());
    CHECK(seg.edges() == first);
}

TEST_CASE("link examples") {
    auto l1 = link(clique(4, 3), {1, 2});
    CHECK(l1.links == std::vector<Edge>{{3}, {4}});
    CHECK(link(Hypergraph(3, 4, {{1, 2, 3}}), {4}).links.empty());
    CHECK(link(colex_segment(4, 2), {1}).links == std::vector<Edge>{{2}, {3}, {4}});
    // |S| = r convention: the empty tuple marks membership
    CHECK(link(Hypergraph(3, 4, {{1, 2, 3}}), {1, 2, 3}).links == std::vector<Edge>{{}});
    CHECK(link(Hypergraph(3, 4, {{1, 2, 3}}), {1, 2, 4}).links.empty());
    CHECK_THROWS_AS((void)link(Hypergraph(2, 4, {{1, 2}}), {1, 2, 3}), InputError);
}

TEST_CASE("compress_xy examples") {
    CHECK(compress_xy(Hypergraph(2, 3, {{2, 3}}), 1, 3) == Hypergraph(2, 3, {{1, 2}}));
    Hypergraph fixed(2, 3, {{1, 3}, {2, 3}});
    CHECK(compress_xy(fixed, 1, 2) == fixed);
    CHECK_THROWS_AS((void)compress_xy(fixed, 2, 2), InputError);
    CHECK_THROWS_AS((void)compress_xy(fixed, 3, 1), InputError);

    Hypergraph lc = colex_segment(7, 3);
    for (Vertex y = 2; y <= lc.n(); ++y)
        for (Vertex x = 1; x < y; ++x) CHECK(compress_xy(lc, x, y) == lc);
}

TEST_CASE("compression preserves edge count on random graphs") {
    Rng rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        int r = 2 + static_cast<int>(rng.next_below(3));
        int n = r + 1 + static_cast<int>(rng.next_below(5));
        auto g = oracles::random_graph(rng, r, n, 1 + static_cast<std::int64_t>(rng.next_below(10)));
        Vertex y = 2 + static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        Vertex x = 1 + static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(y - 1)));
        CHECK(compress_xy(g, x, y).edge_count() == g.edge_count());
    }
}

TEST_CASE("is_left_compressed") {
    CHECK(is_left_compressed(clique(5, 3)));
    CHECK_FALSE(is_left_compressed(Hypergraph(2, 3, {{2, 3}})));
    for (int r : {2, 3, 4})
        for (std::int64_t m : {1, 2, 5, 17, 50, 100})
            CHECK(is_left_compressed(colex_segment(m, r)));
}

TEST_CASE("p2 examples and dual formula") {
    CHECK(p2(colex_segment(4, 2)) == 18);
    CHECK(p2(Hypergraph(2, 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 20);
    for (int r : {2, 3, 4}) CHECK(p2(colex_segment(1, r)) == r);

    Rng rng(13);
    for (int iter = 0; iter < 1000; ++iter) {
        int r = 2 + static_cast<int>(rng.next_below(3));
        int n = r + static_cast<int>(rng.next_below(6));
        auto g = oracles::random_graph(rng, r, n, static_cast<std::int64_t>(rng.next_below(12)));
        // independent pairwise-intersection oracle
        std::int64_t pairwise = 0;
        for (const Edge& e : g.edges())
            for (const Edge& f : g.edges()) {
                std::vector<Vertex> common;
                std::set_intersection(e.begin(), e.end(), f.begin(), f.end(),
                                      std::back_inserter(common));
                pairwise += static_cast<std::int64_t>(common.size());
            }
        CHECK(p2(g) == pairwise);
    }
}

TEST_CASE("complement examples, involution, colex structure") {
    CHECK(complement(clique(5, 3), 5).edge_count() == 0);
    CHECK(complement(Hypergraph(3, 4, {}), 4) == clique(4, 3));
    CHECK_THROWS_AS((void)complement(clique(5, 3), 4), InputError);

    Rng rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        int r = 2 + static_cast<int>(rng.next_below(2));
        int t = r + 1 + static_cast<int>(rng.next_below(4));
        auto g = oracles::random_graph(rng, r, t, static_cast<std::int64_t>(rng.next_below(8)));
        CHECK(complement(complement(g, t), t) == g);
    }

    // non-edges of the colex graph at the principal-range edge count are
    // exactly the r-sets containing the two largest vertices (t=7, r=3)
    const int t = 7, r = 3;
    Hypergraph g = colex_segment(binomial(t, r) - binomial(t - 2, r - 2), r);
    Hypergraph missing = complement(g, t);
    CHECK(missing.edge_count() == binomial(t - 2, r - 2));
    for (const Edge& e : missing.edges()) {
        CHECK(std::binary_search(e.begin(), e.end(), t - 1));
        CHECK(std::binary_search(e.begin(), e.end(), t));
    }
}

TEST_CASE("are_twins") {
    Hypergraph k = clique(5, 3);
    for (Vertex x = 1; x <= 5; ++x)
        for (Vertex y = x + 1; y <= 5; ++y) CHECK(are_twins(k, x, y));

    CHECK_FALSE(are_twins(Hypergraph(3, 4, {{1, 2, 3}}), 1, 4));
    CHECK_THROWS_AS((void)are_twins(k, 2, 2), InputError);

    // vertices inside the tail set I of an I-pattern graph are twins
    Hypergraph g = realize_ipattern(IPattern(8, 4, 2, colex_segment(3, 2)));
    CHECK(are_twins(g, 7, 8));
}
