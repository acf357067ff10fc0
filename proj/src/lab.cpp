#include "hylag/lab.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hylag/graph_io.hpp"

namespace hylag {

namespace {

void check_enumeration_feasible(std::int64_t m, int r) {
    const bool ok = (r == 2 && m <= 40) || (r == 3 && m <= 12) || (r == 4 && m <= 8);
    if (!ok)
        throw InfeasibleError(
            "enumeration over left-compressed graphs is infeasible at r=" + std::to_string(r) +
            ", m=" + std::to_string(m) +
            " (supported: r=2 m<=40, r=3 m<=12, r=4 m<=8); use the targeted mode");
}

FFStatus classify(double margin, double cert, bool converged) {
    if (margin > cert) return FFStatus::colex_beaten;
    if (converged) return FFStatus::colex_best;
    return FFStatus::inconclusive;
}

}  // namespace

std::string to_string(FFStatus s) {
    switch (s) {
        case FFStatus::colex_best: return "colex_best";
        case FFStatus::colex_beaten: return "colex_beaten";
        default: return "inconclusive";
    }
}

MaxLagrangian max_lagrangian(std::int64_t m, int r, const SolverConfig& cfg) {
    if (m < 0) throw RangeError("max_lagrangian: negative edge count");
    if (m == 0) return MaxLagrangian{0.0, Hypergraph(r, r, {}), 0.0, true, 1};
    check_enumeration_feasible(m, r);

    const int n_max = static_cast<int>(r + m);
    MaxLagrangian best{-1.0, Hypergraph(r, r, {}), 0.0, true, 0};
    enumerate_left_compressed(r, m, n_max, [&](const Hypergraph& g) {
        SolveReport rep = solve_lagrangian(g, cfg);
        ++best.graphs_tried;
        best.converged = best.converged && rep.converged;
        if (rep.lambda_estimate > best.value) {
            best.value = rep.lambda_estimate;
            best.argmax = g;
            best.kkt = rep.kkt_residual;
        }
    });
    return best;
}

FFVerdict ff_check(std::int64_t m, int r, const SolverConfig& cfg) {
    Hypergraph colex = colex_segment(m, r);
    SolveReport colex_rep = solve_lagrangian(colex, cfg);
    MaxLagrangian best = max_lagrangian(m, r, cfg);

    FFVerdict v{m,
                r,
                colex.n(),
                0,
                0,
                colex_rep.lambda_estimate,
                best.value,
                best.argmax,
                best.value - colex_rep.lambda_estimate,
                10.0 * (cfg.tolerance + colex_rep.kkt_residual + best.kkt),
                colex_rep.kkt_residual,
                best.kkt,
                colex_rep.converged && best.converged,
                FFStatus::inconclusive};
    v.status = classify(v.margin, v.certification_margin, v.converged);
    return v;
}

FFVerdict ff_check_targeted(int t, int r, std::int64_t s, const SolverConfig& cfg) {
    Hypergraph candidate = counterexample_graph(t, r, s);
    const std::int64_t m = candidate.edge_count();
    Hypergraph colex = colex_segment(m, r);
    SolveReport colex_rep = solve_lagrangian(colex, cfg);
    SolveReport cand_rep = solve_lagrangian(candidate, cfg);

    const bool cand_better = cand_rep.lambda_estimate > colex_rep.lambda_estimate;
    FFVerdict v{m,
                r,
                t,
                2,
                s,
                colex_rep.lambda_estimate,
                cand_rep.lambda_estimate,
                cand_better ? candidate : colex,
                cand_rep.lambda_estimate - colex_rep.lambda_estimate,
                10.0 * (cfg.tolerance + colex_rep.kkt_residual + cand_rep.kkt_residual),
                colex_rep.kkt_residual,
                cand_rep.kkt_residual,
                colex_rep.converged && cand_rep.converged,
                FFStatus::inconclusive};
    v.status = classify(v.margin, v.certification_margin, v.converged);
    return v;
}

A1Check check_a1(std::int64_t s, int r, int t) {
    if (r < 2 || t < r) throw InputError("check_a1: bad (r, t)");
    const std::int64_t s_lo = binomial(8LL * r * r, r);
    if (s < s_lo)
        throw InfeasibleError("check_a1: s below the lower bound C(8r^2,r) = " +
                              std::to_string(s_lo));
    const std::int64_t c_tr = binomial(t, r);
    bool in_upper;
    if (r == 2) {
        in_upper = s * 576 <= c_tr;  // beta_2 = 24^-2 exactly
    } else {
        const long double beta = powl(static_cast<long double>(12 * r),
                                      -static_cast<long double>(r) / static_cast<long double>(r - 1));
        in_upper = static_cast<long double>(s) <= beta * static_cast<long double>(c_tr);
    }
    if (!in_upper)
        throw InfeasibleError("check_a1: s above the upper bound (12r)^(-r/(r-1)) * C(t,r)");

    A1Check out{s, r, t, p2(colex_segment(s, r)), p2(lex_segment(s, r, t)), false};
    out.holds = checked_mul(2, out.p2_colex) <= out.p2_lex;
    return out;
}

A2Check check_a2(std::int64_t s, int r, int t) {
    if (r < 2 || t < r) throw InputError("check_a2: bad (r, t)");
    if (s < r + 2 || s > t - r + 1)
        throw InfeasibleError("check_a2: requires r+2 <= s <= t-r+1");

    A2Check out{s, r, t, p2(colex_segment(s, r)), p2(lex_segment(s, r, t)), 0.0, false, false};
    const std::int64_t rs2 = checked_mul(r, checked_mul(s, s));
    // P2(colex) <= (1 - 1/(r s^2)) P2(lex), cross-multiplied to stay exact
    out.holds = checked_mul(out.p2_colex, rs2) <= checked_mul(rs2 - 1, out.p2_lex);
    out.closed_form_ok = out.p2_lex == checked_add(checked_mul(r - 1, checked_mul(s, s)), s);
    out.rhs = (1.0 - 1.0 / static_cast<double>(rs2)) * static_cast<double>(out.p2_lex);
    return out;
}

BoundaryCheck principal_boundary_check(int t, int r) {
    if (r < 2) throw InputError("principal_boundary_check: r must be >= 2");
    if (t <= r) throw InputError("principal_boundary_check: requires t > r");
    const std::int64_t m = binomial(t + 1, r) - binomial(t - 1, r - 2) + 1;
    Hypergraph g = colex_segment(m, r);
    // the colex graph at this m reaches vertex t+1
    std::vector<double> values(static_cast<std::size_t>(g.n()), 0.0);
    for (int x = 1; x <= t - 1; ++x) values[static_cast<std::size_t>(x) - 1] = 1.0 / t;
    values[static_cast<std::size_t>(t) - 1] = 1.0 / (2.0 * t);
    values[static_cast<std::size_t>(t)] = 1.0 / (2.0 * t);
    Weighting w(std::move(values));

    BoundaryCheck out{t, r, m, polynomial_value(g, w), clique_lagrangian(t, r), false};
    out.separated = out.w_value > out.clique_value.to_double();
    return out;
}

TailConsistency tail_p2_consistency_check(const IPattern& p, const SolverConfig& cfg) {
    const std::int64_t s = p.tail.edge_count();
    const int tail_r = p.r - p.i;
    const int tail_t = p.t - p.i;

    Hypergraph candidate_tail = p.tail;
    std::string kind;
    if (binomial(tail_t, tail_r) <= 30 && s <= 8) {
        candidate_tail = p2_max_bruteforce(s, tail_r, tail_t).argmax.front();
        kind = "bruteforce";
    } else {
        candidate_tail = lex_segment(s, tail_r, tail_t);
        kind = "lex";
    }

    SolveReport realized = solve_lagrangian(realize_ipattern(p), cfg);
    SolveReport swapped =
        solve_lagrangian(realize_ipattern(IPattern(p.t, p.r, p.i, candidate_tail)), cfg);

    TailConsistency out{p.t,
                        p.r,
                        p.i,
                        s,
                        p2(p.tail),
                        p2(candidate_tail),
                        kind,
                        realized.lambda_estimate,
                        swapped.lambda_estimate,
                        swapped.lambda_estimate - realized.lambda_estimate,
                        10.0 * (cfg.tolerance + realized.kkt_residual + swapped.kkt_residual),
                        false,
                        true};
    out.tails_differ = out.p2_candidate != out.p2_tail;
    if (out.p2_candidate > out.p2_tail) out.consistent = out.margin >= -out.assert_tolerance;
    return out;
}

std::string sweep_csv_row(const FFVerdict& v, std::uint64_t seed) {
    std::ostringstream os;
    os << v.r << ',' << v.t << ',' << v.i << ',' << v.s << ',' << v.m << ','
       << fmt_double(v.lambda_colex) << ',' << fmt_double(v.lambda_best) << ','
       << fmt_double(v.margin) << ',' << fmt_double(v.kkt_colex) << ',' << fmt_double(v.kkt_best)
       << ',' << to_string(v.status) << ',' << seed;
    return os.str();
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
    std::vector<SweepRow> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("r,", 0) == 0) continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        if (cols.size() != 12) throw InputError("sweep CSV row has " +
                                                std::to_string(cols.size()) + " columns");
        SweepRow row;
        row.r = std::stoi(cols[0]);
        row.t = std::stoi(cols[1]);
        row.i = std::stoi(cols[2]);
        row.s = std::stoll(cols[3]);
        row.m = std::stoll(cols[4]);
        row.lambda_colex = std::stod(cols[5]);
        row.lambda_candidate = std::stod(cols[6]);
        row.margin = std::stod(cols[7]);
        row.kkt_colex = std::stod(cols[8]);
        row.kkt_candidate = std::stod(cols[9]);
        row.status = cols[10];
        row.seed = static_cast<std::uint64_t>(std::stoull(cols[11]));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hylag
