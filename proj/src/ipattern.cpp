#include "hylag/ipattern.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hylag {

namespace {

Hypergraph normalize_tail(int t, int r, int i, const Hypergraph& tail) {
    if (r < 4) throw InputError("IPattern: requires r >= 4");
    if (i < 2 || i > r - 2) throw InputError("IPattern: requires 2 <= i <= r-2");
    if (t - i < r - i) throw InputError("IPattern: requires t >= r");
    if (tail.r() != r - i)
        throw InputError("IPattern: tail uniformity " + std::to_string(tail.r()) +
                         ", expected " + std::to_string(r - i));
    if (tail.n() > t - i) throw InputError("IPattern: tail graph exceeds {1..t-i}");
    // re-ambient to exactly {1..t-i}
    return Hypergraph(r - i, t - i, tail.edges());
}

}  // namespace

IPattern::IPattern(int t_, int r_, int i_, const Hypergraph& tail_)
    : t(t_), r(r_), i(i_), tail(normalize_tail(t_, r_, i_, tail_)) {}

Hypergraph realize_ipattern(const IPattern& p) {
    std::vector<Edge> edges;
    // every r-set avoiding some vertex of I = {t-i+1..t} is an edge
    Edge e(static_cast<std::size_t>(p.r));
    for (int j = 0; j < p.r; ++j) e[static_cast<std::size_t>(j)] = j + 1;
    const Vertex i_lo = p.t - p.i + 1;
    auto contains_tail_set = [&](const Edge& f) {
        // f sorted; I is the top i vertices, so it suffices to check the suffix
        if (static_cast<int>(f.size()) < p.i) return false;
        for (int k = 0; k < p.i; ++k)
            if (f[f.size() - 1 - static_cast<std::size_t>(k)] != p.t - k) return false;
        return true;
    };
    (void)i_lo;
    bool more = true;
    while (more) {
        if (!contains_tail_set(e)) edges.push_back(e);
        // lex successor of a sorted r-subset of {1..t}
        more = false;
        for (int j = p.r - 1; j >= 0; --j) {
            if (e[static_cast<std::size_t>(j)] < p.t - (p.r - 1 - j)) {
                ++e[static_cast<std::size_t>(j)];
                for (int k = j + 1; k < p.r; ++k)
                    e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k) - 1] + 1;
                more = true;
                break;
            }
        }
    }
    for (const Edge& f : p.tail.edges()) {
        Edge full = f;
        for (int k = p.i - 1; k >= 0; --k) full.push_back(p.t - k);
        edges.push_back(std::move(full));
    }
    return Hypergraph(p.r, p.t, std::move(edges));
}

TailExtraction extract_tail(const Hypergraph& g, int t, int i) {
    const int r = g.r();
    if (r < 4) throw InputError("extract_tail: requires r >= 4");
    if (i < 2 || i > r - 2) throw InputError("extract_tail: requires 2 <= i <= r-2");
    if (g.n() > t) throw InputError("extract_tail: graph not within {1..t}");

    Edge tail_set(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) tail_set[static_cast<std::size_t>(k)] = t - i + 1 + k;

    Hypergraph on_t(r, t, g.edges());
    Hypergraph missing = complement(on_t, t);
    for (const Edge& e : missing.edges()) {
        if (!std::includes(e.begin(), e.end(), tail_set.begin(), tail_set.end()))
            return TailExtraction{false, std::nullopt, e};
    }

    std::vector<Edge> tail_edges;
    for (const Edge& e : on_t.edges()) {
        if (!std::includes(e.begin(), e.end(), tail_set.begin(), tail_set.end())) continue;
        Edge f;
        f.reserve(e.size() - tail_set.size());
        std::set_difference(e.begin(), e.end(), tail_set.begin(), tail_set.end(),
                            std::back_inserter(f));
        tail_edges.push_back(std::move(f));
    }
    return TailExtraction{true, Hypergraph(r - i, t - i, std::move(tail_edges)), {}};
}

Hypergraph counterexample_graph(int t, int r, std::int64_t s) {
    if (r < 4) throw RangeError("counterexample_graph: requires r >= 4");
    if (t < r + 1) throw RangeError("counterexample_graph: requires t >= r+1");
    if (s < 0 || s > binomial(t - 2, r - 2))
        throw RangeError("counterexample_graph: s outside 0..C(t-2,r-2)");
    return realize_ipattern(IPattern(t, r, 2, lex_segment(s, r - 2, t - 2)));
}

SRange valid_s_range(int t, int r) {
    if (r < 4) throw RangeError("valid_s_range: the construction requires r >= 4");
    if (t <= r) throw RangeError("valid_s_range: requires t > r");
    const std::int64_t c = binomial(t - 2, r - 2);
    std::int64_t s_max;
    if ((r - 2) % (r - 3) == 0) {
        // integer exponent (only r = 4): alpha_r = (12(r-2))^-k exactly
        const std::int64_t denom = checked_pow(12 * (r - 2), (r - 2) / (r - 3));
        s_max = c / denom;
    } else {
        const long double alpha =
            powl(static_cast<long double>(12 * (r - 2)),
                 -static_cast<long double>(r - 2) / static_cast<long double>(r - 3));
        s_max = static_cast<std::int64_t>(floorl(alpha * static_cast<long double>(c)));
    }
    return SRange{r, s_max};
}

}  // namespace hylag
