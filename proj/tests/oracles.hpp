// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hylag/hypergraph.hpp"
#include "hylag/rng.hpp"

namespace oracles {

using hylag::Edge;
using hylag::Hypergraph;
using hylag::Vertex;

// all r-subsets of {1..n} in lex order of sorted tuples
inline std::vector<Edge> all_subsets(int n, int r) {
    std::vector<Edge> out;
    Edge e(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) e[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        out.push_back(e);
        int j = r - 1;
        while (j >= 0 && e[static_cast<std::size_t>(j)] == n - (r - 1 - j)) --j;
        if (j < 0) break;
        ++e[static_cast<std::size_t>(j)];
        for (int k = j + 1; k < r; ++k)
            e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k) - 1] + 1;
    }
    return out;
}

// the defining power-sum key of the colex order; valid for vertices <= 62
inline std::uint64_t colex_key(const Edge& e) {
    std::uint64_t key = 0;
    for (Vertex x : e) key += (1ull << static_cast<unsigned>(x));
    return key;
}

// subsets of {1..n} sorted by the power-sum definition
inline std::vector<Edge> colex_order_oracle(int n, int r) {
    std::vector<Edge> out = all_subsets(n, r);
    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return colex_key(a) < colex_key(b); });
    return out;
}

// A < B iff min(A symmetric-difference B) belongs to A
inline bool lex_less_oracle(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else {
            return a[i] < b[j];
        }
    }
    return i < a.size();
}

// direct edge-polynomial evaluation on a raw weight vector (1-based verts)
inline double poly_eval(const std::vector<Edge>& edges, const std::vector<double>& w) {
    double total = 0.0;
    for (const Edge& e : edges) {
        double p = 1.0;
        for (Vertex x : e) p *= w[static_cast<std::size_t>(x) - 1];
        total += p;
    }
    return total;
}

// central finite differences of the raw polynomial
inline std::vector<double> central_diff_gradient(const std::vector<Edge>& edges,
                                                 std::vector<double> w, double h) {
    std::vector<double> g(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double keep = w[i];
        w[i] = keep + h;
        const double up = poly_eval(edges, w);
        w[i] = keep - h;
        const double down = poly_eval(edges, w);
        w[i] = keep;
        g[i] = (up - down) / (2.0 * h);
    }
    return g;
}

inline Hypergraph random_graph(hylag::Rng& rng, int r, int n, std::int64_t m) {
    std::vector<Edge> universe = all_subsets(n, r);
    for (std::size_t i = universe.size(); i > 1; --i)
        std::swap(universe[i - 1], universe[rng.next_below(i)]);
    m = std::min<std::int64_t>(m, static_cast<std::int64_t>(universe.size()));
    universe.resize(static_cast<std::size_t>(m));
    return Hypergraph(r, n, std::move(universe));
}

inline std::vector<double> random_simplex_point(hylag::Rng& rng, int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& v : w) {
        v = -std::log(1.0 - rng.next_double());
        total += v;
    }
    for (double& v : w) v /= total;
    return w;
}

// number of partitions of m into distinct parts (counts left-compressed
// 2-graphs with m edges)
inline std::int64_t distinct_partition_count(int m) {
    std::vector<std::int64_t> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int total = m; total >= part; --total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(m)];
}

// largest clique found greedily by descending degree; returns its vertices
inline std::vector<Vertex> greedy_clique(const Hypergraph& g) {
    std::vector<Vertex> order = g.support();
    auto deg = g.degrees();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return deg[static_cast<std::size_t>(a) - 1] > deg[static_cast<std::size_t>(b) - 1];
    });
    std::vector<Vertex> cliq;
    for (Vertex v : order) {
        std::vector<Vertex> cand = cliq;
        cand.push_back(v);
        std::sort(cand.begin(), cand.end());
        if (static_cast<int>(cand.size()) < g.r()) {
            cliq = cand;
            continue;
        }
        // every r-subset of cand containing v must be an edge
        std::vector<Vertex> rest;
        for (Vertex u : cand)
            if (u != v) rest.push_back(u);
        bool ok = true;
        std::vector<int> pick(static_cast<std::size_t>(g.r() - 1));
        for (int j = 0; j < g.r() - 1; ++j) pick[static_cast<std::size_t>(j)] = j;
        const int nn = static_cast<int>(rest.size());
        const int k = g.r() - 1;
        while (ok) {
            Edge e;
            for (int idx : pick) e.push_back(rest[static_cast<std::size_t>(idx)]);
            e.push_back(v);
            std::sort(e.begin(), e.end());
            if (!g.contains(e)) ok = false;
            int j = k - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] == nn - k + j) --j;
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < k; ++l)
                pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l) - 1] + 1;
        }
        if (ok) cliq = cand;
    }
    return cliq;
}

}  // namespace oracles
