#pragma once

#include <cstdint>
#include <vector>

#include "hylag/combinatorics.hpp"
#include "hylag/hypergraph.hpp"
#include "hylag/weighting.hpp"

namespace hylag {

struct SolverConfig {
    enum class StepRule { fixed, backtracking };

    int restarts = 8;               // random-subset restarts
    std::int64_t max_iterations = 20000;  // per restart
    StepRule step_rule = StepRule::backtracking;
    double tolerance = 1e-9;        // KKT residual target
    std::uint64_t rng_seed = 1;
    int support_enumeration_cutoff = 12;  // max |V| for per-subset seeding
    double support_floor = 1e-9;    // weights below it count as zero in KKT checks
    double fixed_step = 0.25;       // step size when step_rule == fixed
};

struct SolveReport {
    double lambda_estimate;   // recomputed from the weighting, never carried
    Weighting weighting;
    double kkt_residual;
    int restarts_used;
    std::int64_t iterations;  // total across restarts
    bool converged;
    std::uint64_t seed;
};

// Value of the edge polynomial sum_e prod_{x in e} w(x); deterministic
// left-to-right summation in stored edge order.
double polynomial_value(const Hypergraph& g, const Weighting& w);

// Partial derivatives: component x equals the weight of the link of x.
std::vector<double> gradient(const Hypergraph& g, const Weighting& w);

// sum of products over a link's tuples (1 for the empty tuple)
double link_weight(const VertexSubsetLink& l, const Weighting& w);

struct WeightShift {
    Weighting shifted;       // w with eps moved from y to x
    double predicted_delta;  // eps*(w(N(x)) - w(N(y))) - eps^2*w(N(x,y))
};

// Requires 0 <= eps <= w(y), x != y.
WeightShift weight_shift_delta(const Hypergraph& g, const Weighting& w,
                               Vertex x, Vertex y, double eps);

// Max over supported pairs of |w(N(x)) - w(N(y))|, combined (max) with
// |r * value - w(N(y))| over supported y; 0 on empty support.
double kkt_residual(const Hypergraph& g, const Weighting& w,
                    double support_floor = 1e-9);

// Best-of-restarts ascent over the simplex. The returned value is a
// certified lower bound on the Lagrangian; global optimality is heuristic.
SolveReport solve_lagrangian(const Hypergraph& g, const SolverConfig& cfg = {});

// Exact C(t, r) / t^r.
Rational clique_lagrangian(int t, int r);

struct CompressionGain {
    double before;     // w(G)
    double after;      // w(C_xy(G))
    double shift_sum;  // sum over moved edges of (w(x)-w(y)) * w(e \ {y})
};

// Requires w decreasing and x < y; after >= before is the guarantee
// under test, shift_sum is the same difference computed edge by edge.
CompressionGain compression_monotonicity_check(const Hypergraph& g, const Weighting& w,
                                               Vertex x, Vertex y);

}  // namespace hylag
