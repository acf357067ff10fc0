#pragma once

#include <cstdint>
#include <optional>

#include "hylag/hypergraph.hpp"

namespace hylag {

// Description of an r-graph on {1..t} whose non-edges all contain the
// tail set I = {t-i+1, ..., t}: every r-set avoiding I is an edge, and
// the edges containing I are encoded by an (r-i)-uniform tail graph on
// {1..t-i}. Requires 2 <= i <= r-2.
struct IPattern {
    int t;
    int r;
    int i;
    Hypergraph tail;  // ambient vertex set normalized to {1..t-i}

    IPattern(int t_, int r_, int i_, const Hypergraph& tail_);
};

// Realized graph; edge count is C(t,r) - C(t-i,r-i) + |tail|.
Hypergraph realize_ipattern(const IPattern& p);

// Either the tail graph, or the witnessing non-edge that misses I.
// A structural violation is a legitimate answer, not an exception.
struct TailExtraction {
    bool ok;
    std::optional<Hypergraph> tail;
    Edge violating_nonedge;  // set when !ok
};

TailExtraction extract_tail(const Hypergraph& g, int t, int i);

// I-pattern graph with i = 2 and a lex-segment tail of size s.
// Requires r >= 4, t >= r + 1, 0 <= s <= C(t-2, r-2).
Hypergraph counterexample_graph(int t, int r, std::int64_t s);

// Tail sizes for which the counterexample family is guaranteed to beat
// the colex graph at sufficiently large t: s_min = r,
// s_max = floor(alpha_r * C(t-2, r-2)) with alpha_r = (12(r-2))^(-(r-2)/(r-3)).
// May be empty for small t. Requires r >= 4, t > r.
struct SRange {
    std::int64_t s_min;
    std::int64_t s_max;
    bool empty() const { return s_max < s_min; }
};

SRange valid_s_range(int t, int r);

}  // namespace hylag
