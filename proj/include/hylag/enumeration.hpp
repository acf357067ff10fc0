#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hylag/hypergraph.hpp"

namespace hylag {

// Streams every left-compressed r-graph with m edges on at most n_max
// vertices, each exactly once, in a fixed deterministic order. A family
// is left-compressed iff it is a down-set in the coordinatewise order
// on sorted tuples, so candidates are grown in increasing colex rank
// with all immediate predecessors required to be present.
// Small instances only; the caller bounds the work.
void enumerate_left_compressed(int r, std::int64_t m, int n_max,
                               const std::function<void(const Hypergraph&)>& yield);

std::vector<Hypergraph> left_compressed_graphs(int r, std::int64_t m, int n_max);

struct P2MaxResult {
    std::int64_t max_p2;
    std::vector<Hypergraph> argmax;  // every m-edge graph attaining the max, label order
};

// Exact maximum of the degree-square sum over all m-edge r-graphs on
// {1..t}, by exhaustive enumeration. Refuses when C(t,r) > 30 or m > 8.
P2MaxResult p2_max_bruteforce(std::int64_t m, int r, int t);

}  // namespace hylag
