#pragma once

#include <cstdint>
#include <vector>

#include "hylag/combinatorics.hpp"
#include "hylag/errors.hpp"

namespace hylag {

using Vertex = int;
// An edge is a strictly increasing tuple of 1-based vertex labels.
using Edge = std::vector<Vertex>;

// r-uniform hypergraph on the ambient vertex set {1..n}. Edges are
// validated, deduplicated and kept sorted lexicographically, so equal
// graphs compare equal member-wise and iteration order is deterministic.
// Immutable after construction.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<Edge> edges);

    int r() const { return r_; }
    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    bool contains(const Edge& e) const;

    // degrees()[x-1] is the degree of vertex x
    std::vector<std::int64_t> degrees() const;
    std::int64_t degree(Vertex x) const;

    // non-isolated vertices, sorted
    std::vector<Vertex> support() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
};

// --- colex / lex orders and segments ---------------------------------------

// 0-based position of e in the colex order on all r-sets of positive
// integers; equals sum_j C(x_j - 1, j) for e = (x_1 < ... < x_r).
std::int64_t colex_rank(const Edge& e);

// inverse of colex_rank
Edge colex_unrank(std::int64_t rank, int r);

// first m r-sets in colex order; ambient n = largest vertex appearing
// (n = r when m = 0)
Hypergraph colex_segment(std::int64_t m, int r);

// first s r-subsets of {1..t} in lex order (A < B iff min(A^B) in A),
// on ambient vertex set {1..t}
Hypergraph lex_segment(std::int64_t s, int r, int t);

// complete r-graph on {1..t}
Hypergraph clique(int t, int r);

// r-sets of {1..t} that are not edges of g; requires g within {1..t}
Hypergraph complement(const Hypergraph& g, int t);

// --- links, compressions, degrees ------------------------------------------

// Link of a vertex subset: the (r-|S|)-tuples whose union with S is an
// edge. For |S| = r the empty tuple is present iff S itself is an edge,
// so a link's weight contribution under a weighting is 1 or 0 there.
struct VertexSubsetLink {
    Hypergraph base;
    std::vector<Vertex> removed;  // S, sorted
    std::vector<Edge> links;      // sorted lexicographically
};

VertexSubsetLink link(const Hypergraph& g, std::vector<Vertex> s);

// Replaces y by x (x < y) in every edge where the replacement keeps a
// valid set and the image is not already present; family semantics
// keep an edge whenever its image is occupied. Edge count is preserved.
Hypergraph compress_xy(const Hypergraph& g, Vertex x, Vertex y);

// true iff compress_xy(g, x, y) == g for all 1 <= x < y <= n
bool is_left_compressed(const Hypergraph& g);

// Sum of squared vertex degrees. Debug builds cross-check the
// equivalent pairwise-intersection sum on small graphs.
std::int64_t p2(const Hypergraph& g);

// true iff the links of x and y agree after excluding tuples that
// contain the other vertex
bool are_twins(const Hypergraph& g, Vertex x, Vertex y);

}  // namespace hylag
