#include "hylag/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace hylag {

namespace {

void validate_edge(const Edge& e, int r, int n) {
    if (static_cast<int>(e.size()) != r)
        throw InputError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                         std::to_string(r));
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] < 1 || e[j] > n)
            throw InputError("vertex " + std::to_string(e[j]) + " outside 1.." + std::to_string(n));
        if (j > 0 && e[j - 1] >= e[j])
            throw InputError("edge tuple not strictly increasing");
    }
}

#ifndef NDEBUG
// pairwise-intersection form of the degree-square sum
std::int64_t p2_by_intersections(const Hypergraph& g) {
    std::int64_t total = 0;
    const auto& es = g.edges();
    for (const Edge& e : es) {
        for (const Edge& f : es) {
            std::size_t a = 0, b = 0;
            std::int64_t common = 0;
            while (a < e.size() && b < f.size()) {
                if (e[a] == f[b]) {
                    ++common;
                    ++a;
                    ++b;
                } else if (e[a] < f[b]) {
                    ++a;
                } else {
                    ++b;
                }
            }
            total = checked_add(total, common);
        }
    }
    return total;
}
#endif

}  // namespace

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw InputError("uniformity r must be >= 2");
    if (n_ < r_) throw InputError("ambient vertex count n must be >= r");
    for (const Edge& e : edges_) validate_edge(e, r_, n_);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
}

bool Hypergraph::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::int64_t> Hypergraph::degrees() const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_)
        for (Vertex x : e) ++d[static_cast<std::size_t>(x) - 1];
    return d;
}

std::int64_t Hypergraph::degree(Vertex x) const {
    if (x < 1 || x > n_) throw InputError("degree: vertex outside 1..n");
    std::int64_t d = 0;
    for (const Edge& e : edges_)
        if (std::binary_search(e.begin(), e.end(), x)) ++d;
    return d;
}

std::vector<Vertex> Hypergraph::support() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (const Edge& e : edges_)
        for (Vertex x : e) seen[static_cast<std::size_t>(x)] = true;
    std::vector<Vertex> out;
    for (Vertex x = 1; x <= n_; ++x)
        if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

// --- orders and segments ----------------------------------------------------

std::int64_t colex_rank(const Edge& e) {
    std::int64_t rank = 0;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] < 1 || (j > 0 && e[j - 1] >= e[j]))
            throw InputError("colex_rank: tuple not strictly increasing over positive integers");
        rank = checked_add(rank, binomial(e[j] - 1, static_cast<std::int64_t>(j) + 1));
    }
    return rank;
}

Edge colex_unrank(std::int64_t rank, int r) {
    if (rank < 0) throw RangeError("colex_unrank: negative rank");
    if (r < 1) throw InputError("colex_unrank: r must be >= 1");
    Edge e(static_cast<std::size_t>(r));
    std::int64_t rem = rank;
    for (int j = r; j >= 1; --j) {
        // largest x with C(x-1, j) <= rem
        std::int64_t x = j;  // C(j-1, j) = 0 <= rem
        while (binomial(x, j) <= rem) ++x;
        e[static_cast<std::size_t>(j) - 1] = static_cast<Vertex>(x);
        rem -= binomial(x - 1, j);
    }
    return e;
}

Hypergraph colex_segment(std::int64_t m, int r) {
    if (m < 0) throw RangeError("colex_segment: negative edge count");
    if (r < 2) throw InputError("colex_segment: r must be >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    int n = r;  // minimal legal ambient when m = 0
    for (std::int64_t k = 0; k < m; ++k) {
        edges.push_back(colex_unrank(k, r));
        n = std::max(n, edges.back().back());
    }
    return Hypergraph(r, n, std::move(edges));
}

namespace {

// advance a sorted r-subset of {1..t} to its lex successor; false at the end
bool next_combination(Edge& e, int t) {
    int r = static_cast<int>(e.size());
    for (int j = r - 1; j >= 0; --j) {
        if (e[static_cast<std::size_t>(j)] < t - (r - 1 - j)) {
            ++e[static_cast<std::size_t>(j)];
            for (int k = j + 1; k < r; ++k)
                e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k) - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Hypergraph lex_segment(std::int64_t s, int r, int t) {
    if (r < 2) throw InputError("lex_segment: r must be >= 2");
    if (t < r) throw InputError("lex_segment: t must be >= r");
    if (s < 0 || s > binomial(t, r)) throw RangeError("lex_segment: s outside 0..C(t,r)");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(s));
    Edge e(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) e[static_cast<std::size_t>(j)] = j + 1;
    for (std::int64_t k = 0; k < s; ++k) {
        edges.push_back(e);
        if (!next_combination(e, t)) break;
    }
    return Hypergraph(r, t, std::move(edges));
}

Hypergraph clique(int t, int r) {
    if (t < r) throw RangeError("clique: t must be >= r");
    return lex_segment(binomial(t, r), r, t);
}

Hypergraph complement(const Hypergraph& g, int t) {
    if (t < g.r()) throw InputError("complement: t must be >= r");
    for (const Edge& e : g.edges())
        if (e.back() > t) throw InputError("complement: graph has an edge outside {1..t}");
    std::vector<Edge> edges;
    Edge e(static_cast<std::size_t>(g.r()));
    for (int j = 0; j < g.r(); ++j) e[static_cast<std::size_t>(j)] = j + 1;
    do {
        if (!g.contains(e)) edges.push_back(e);
    } while (next_combination(e, t));
    return Hypergraph(g.r(), t, std::move(edges));
}

// --- links, compressions ----------------------------------------------------

VertexSubsetLink link(const Hypergraph& g, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("link: repeated vertex in S");
    for (Vertex x : s)
        if (x < 1 || x > g.n()) throw InputError("link: S not within 1..n");
    if (static_cast<int>(s.size()) > g.r()) throw InputError("link: |S| exceeds r");

    std::vector<Edge> links;
    for (const Edge& e : g.edges()) {
        if (!std::includes(e.begin(), e.end(), s.begin(), s.end())) continue;
        Edge f;
        f.reserve(e.size() - s.size());
        std::set_difference(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(f));
        links.push_back(std::move(f));
    }
    std::sort(links.begin(), links.end());
    return VertexSubsetLink{g, std::move(s), std::move(links)};
}

Hypergraph compress_xy(const Hypergraph& g, Vertex x, Vertex y) {
    if (x >= y) throw InputError("compress_xy: requires x < y");
    if (x < 1 || y > g.n()) throw InputError("compress_xy: vertices outside 1..n");
    std::vector<Edge> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        bool has_y = std::binary_search(e.begin(), e.end(), y);
        bool has_x = std::binary_search(e.begin(), e.end(), x);
        if (!has_y || has_x) {
            out.push_back(e);
            continue;
        }
        Edge ce;
        ce.reserve(e.size());
        for (Vertex v : e)
            if (v != y) ce.push_back(v);
        ce.insert(std::lower_bound(ce.begin(), ce.end(), x), x);
        // keep the original when its image is already occupied
        out.push_back(g.contains(ce) ? e : std::move(ce));
    }
    Hypergraph result(g.r(), g.n(), std::move(out));
    assert(result.edge_count() == g.edge_count());
    return result;
}

bool is_left_compressed(const Hypergraph& g) {
    for (Vertex y = 2; y <= g.n(); ++y)
        for (Vertex x = 1; x < y; ++x)
            if (!(compress_xy(g, x, y) == g)) return false;
    return true;
}

std::int64_t p2(const Hypergraph& g) {
    std::int64_t total = 0;
    for (std::int64_t d : g.degrees()) total = checked_add(total, checked_mul(d, d));
#ifndef NDEBUG
    if (g.edge_count() <= 500) assert(total == p2_by_intersections(g));
#endif
    return total;
}

bool are_twins(const Hypergraph& g, Vertex x, Vertex y) {
    if (x == y) throw InputError("are_twins: vertices must differ");
    if (x < 1 || x > g.n() || y < 1 || y > g.n())
        throw InputError("are_twins: vertices outside 1..n");
    // N_y(x): tuples completing x to an edge and avoiding y; likewise swapped
    auto one_sided = [&](Vertex a, Vertex b) {
        std::vector<Edge> out;
        for (const Edge& e : g.edges()) {
            if (!std::binary_search(e.begin(), e.end(), a)) continue;
            if (std::binary_search(e.begin(), e.end(), b)) continue;
            Edge f;
            f.reserve(e.size() - 1);
            for (Vertex v : e)
                if (v != a) f.push_back(v);
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return one_sided(x, y) == one_sided(y, x);
}

}  // namespace hylag
