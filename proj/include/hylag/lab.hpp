#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hylag/enumeration.hpp"
#include "hylag/hypergraph.hpp"
#include "hylag/ipattern.hpp"
#include "hylag/solver.hpp"

namespace hylag {

// Maximum Lagrangian over all r-graphs with m edges, by enumerating
// left-compressed graphs (maximizers may be assumed left-compressed)
// on at most r+m vertices and solving each. Refuses infeasible sizes.
struct MaxLagrangian {
    double value;
    Hypergraph argmax;
    double kkt;
    bool converged;          // every solve converged
    std::int64_t graphs_tried;
};

MaxLagrangian max_lagrangian(std::int64_t m, int r, const SolverConfig& cfg);

enum class FFStatus { colex_best, colex_beaten, inconclusive };

std::string to_string(FFStatus s);

// One colex-vs-challengers comparison. status is colex_beaten only when
// the observed margin exceeds the certification margin.
struct FFVerdict {
    std::int64_t m;
    int r;
    int t = 0;           // targeted mode: ambient vertex count (0 otherwise)
    int i = 0;           // targeted mode: tail size of I (0 otherwise)
    std::int64_t s = 0;  // targeted mode: tail edge count (0 otherwise)
    double lambda_colex;
    double lambda_best;
    Hypergraph best_graph;
    double margin;                // lambda_best - lambda_colex
    double certification_margin;  // 10 * (tolerance + kkt_colex + kkt_best)
    double kkt_colex;
    double kkt_best;
    bool converged;               // all reports converged
    FFStatus status;
};

// enumeration mode: best over all left-compressed m-edge r-graphs
FFVerdict ff_check(std::int64_t m, int r, const SolverConfig& cfg);

// targeted mode: colex vs the i=2 lex-tail construction at (t, r, s)
FFVerdict ff_check_targeted(int t, int r, std::int64_t s, const SolverConfig& cfg);

// P2(colex(s,r)) <= P2(lex(s,r,t)) / 2, valid for
// C(8r^2, r) <= s <= (12r)^(-r/(r-1)) * C(t,r). Exact integers.
struct A1Check {
    std::int64_t s;
    int r, t;
    std::int64_t p2_colex;
    std::int64_t p2_lex;
    bool holds;
};

A1Check check_a1(std::int64_t s, int r, int t);

// P2(colex(s,r)) <= (1 - 1/(r s^2)) * P2(lex(s,r,t)), valid for
// r+2 <= s <= t-r+1; the lex side has the closed form (r-1)s^2 + s.
struct A2Check {
    std::int64_t s;
    int r, t;
    std::int64_t p2_colex;
    std::int64_t p2_lex;
    double rhs;          // (1 - 1/(r s^2)) * p2_lex
    bool holds;          // exact cross-multiplied comparison
    bool closed_form_ok; // p2_lex == (r-1)s^2 + s
};

A2Check check_a2(std::int64_t s, int r, int t);

// Evaluates the first colex graph past the principal range, at
// m = C(t+1,r) - C(t-1,r-2) + 1, under the explicit weighting
// (1/t on 1..t-1, 1/(2t) on t and t+1), and compares against the
// exact clique value C(t,r)/t^r. separated must come out true.
struct BoundaryCheck {
    int t, r;
    std::int64_t m;
    double w_value;
    Rational clique_value;
    bool separated;
};

BoundaryCheck principal_boundary_check(int t, int r);

// Compares the realized I-pattern graph against the same pattern with
// its tail replaced by a P2-maximizing tail (exhaustive when feasible,
// the lex segment otherwise). Margins are reported; the lambda
// comparison is only asserted when the candidate strictly improves P2.
struct TailConsistency {
    int t, r, i;
    std::int64_t tail_edges;
    std::int64_t p2_tail;
    std::int64_t p2_candidate;
    std::string candidate_kind;  // "bruteforce" | "lex"
    double lambda_realized;
    double lambda_candidate;
    double margin;           // lambda_candidate - lambda_realized
    double assert_tolerance; // 10 * (tolerance + both KKT residuals)
    bool tails_differ;       // p2_candidate != p2_tail
    bool consistent;         // margin >= -assert_tolerance when candidate improves P2
};

TailConsistency tail_p2_consistency_check(const IPattern& p, const SolverConfig& cfg);

// --- sweep report (CSV) ------------------------------------------------------

inline constexpr const char* kSweepCsvHeader =
    "r,t,i,s,m,lambda_colex,lambda_candidate,margin,kkt_colex,kkt_candidate,status,seed";

std::string sweep_csv_row(const FFVerdict& v, std::uint64_t seed);

// one parsed row of a sweep report; floats carry the printed precision
struct SweepRow {
    int r, t, i;
    std::int64_t s, m;
    double lambda_colex, lambda_candidate, margin, kkt_colex, kkt_candidate;
    std::string status;
    std::uint64_t seed;
};

// parses the CSV body, skipping "#" comment lines and the header
std::vector<SweepRow> parse_sweep_csv(const std::string& text);

}  // namespace hylag
