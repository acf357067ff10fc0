#include "hylag/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "hylag/rng.hpp"

namespace hylag {

namespace {

// flat zero-based edge storage; evaluation order matches Hypergraph::edges()
struct FlatGraph {
    int r = 0;
    int n = 0;
    std::vector<int> slots;

    static FlatGraph from(const Hypergraph& g) {
        FlatGraph fg;
        fg.r = g.r();
        fg.n = g.n();
        fg.slots.reserve(g.edges().size() * static_cast<std::size_t>(g.r()));
        for (const Edge& e : g.edges())
            for (Vertex v : e) fg.slots.push_back(v - 1);
        return fg;
    }

    double value(const std::vector<double>& w) const {
        const std::size_t rr = static_cast<std::size_t>(r);
        double total = 0.0;
        for (std::size_t base = 0; base < slots.size(); base += rr) {
            double p = w[static_cast<std::size_t>(slots[base])];
            for (std::size_t k = 1; k < rr; ++k) p *= w[static_cast<std::size_t>(slots[base + k])];
            total += p;
        }
        return total;
    }

    double value_and_gradient(const std::vector<double>& w, std::vector<double>& g,
                              std::vector<double>& pre, std::vector<double>& suf) const {
        const std::size_t rr = static_cast<std::size_t>(r);
        std::fill(g.begin(), g.end(), 0.0);
        pre.assign(rr + 1, 1.0);
        suf.assign(rr + 1, 1.0);
        double total = 0.0;
        for (std::size_t base = 0; base < slots.size(); base += rr) {
            for (std::size_t k = 0; k < rr; ++k)
                pre[k + 1] = pre[k] * w[static_cast<std::size_t>(slots[base + k])];
            suf[rr] = 1.0;
            for (std::size_t k = rr; k-- > 0;)
                suf[k] = w[static_cast<std::size_t>(slots[base + k])] * suf[k + 1];
            total += pre[rr];
            for (std::size_t k = 0; k < rr; ++k)
                g[static_cast<std::size_t>(slots[base + k])] += pre[k] * suf[k + 1];
        }
        return total;
    }

    // off-diagonal Hessian entries restricted to the index set marked in
    // local[] (>= 0 gives the local index); H is |S| x |S|
    void hessian_on(const std::vector<double>& w, const std::vector<int>& local,
                    Eigen::MatrixXd& h, std::vector<double>& pre, std::vector<double>& suf) const {
        const std::size_t rr = static_cast<std::size_t>(r);
        h.setZero();
        pre.assign(rr + 1, 1.0);
        suf.assign(rr + 1, 1.0);
        for (std::size_t base = 0; base < slots.size(); base += rr) {
            for (std::size_t k = 0; k < rr; ++k)
                pre[k + 1] = pre[k] * w[static_cast<std::size_t>(slots[base + k])];
            suf[rr] = 1.0;
            for (std::size_t k = rr; k-- > 0;)
                suf[k] = w[static_cast<std::size_t>(slots[base + k])] * suf[k + 1];
            for (std::size_t a = 0; a + 1 < rr; ++a) {
                int la = local[static_cast<std::size_t>(slots[base + a])];
                if (la < 0) continue;
                double inner = 1.0;
                for (std::size_t b = a + 1; b < rr; ++b) {
                    int lb = local[static_cast<std::size_t>(slots[base + b])];
                    if (lb >= 0) {
                        double contrib = pre[a] * inner * suf[b + 1];
                        h(la, lb) += contrib;
                        h(lb, la) += contrib;
                    }
                    inner *= w[static_cast<std::size_t>(slots[base + b])];
                }
            }
        }
    }
};

struct Residual {
    double supported = 0.0;      // over vertices with w > floor; this is what gets reported
    double off_violation = 0.0;  // max(0, g(x) - r*v) over w <= floor
    double internal() const { return std::max(supported, off_violation); }
};

Residual residual_of(const std::vector<double>& w, const std::vector<double>& g, double v,
                     int r, double floor_) {
    Residual res;
    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    double dev = 0.0;
    double off = 0.0;
    const double rv = static_cast<double>(r) * v;
    bool any = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > floor_) {
            any = true;
            gmax = std::max(gmax, g[i]);
            gmin = std::min(gmin, g[i]);
            dev = std::max(dev, std::abs(rv - g[i]));
        } else {
            off = std::max(off, g[i] - rv);
        }
    }
    res.supported = any ? std::max(gmax - gmin, dev) : 0.0;
    res.off_violation = std::max(0.0, off);
    return res;
}

void renormalize(std::vector<double>& w) {
    double s = 0.0;
    for (double v : w) s += v;
    if (s > 0.0)
        for (double& v : w) v /= s;
}

// Euclidean projection onto the unit simplex
std::vector<double> project_simplex(std::vector<double> z) {
    std::vector<double> u = z;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    int k = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            tau = t;
            k = static_cast<int>(i + 1);
        }
    }
    (void)k;
    for (double& v : z) v = std::max(0.0, v - tau);
    renormalize(z);
    return z;
}

struct AscentOutcome {
    std::vector<double> w;
    double value = 0.0;
    bool converged = false;
    std::int64_t iterations = 0;
};

class Ascent {
public:
    Ascent(const FlatGraph& fg, const SolverConfig& cfg) : fg_(fg), cfg_(cfg) {}

    AscentOutcome run(std::vector<double> w, std::int64_t budget) {
        const std::size_t n = w.size();
        std::vector<double> g(n, 0.0);
        AscentOutcome out;
        double last_window_value = -std::numeric_limits<double>::infinity();
        std::int64_t it = 0;
        bool converged = false;
        for (; it < budget; ++it) {
            double v = fg_.value_and_gradient(w, g, pre_, suf_);
            Residual res = residual_of(w, g, v, fg_.r, cfg_.support_floor);
            if (res.internal() <= cfg_.tolerance) {
                converged = true;
                break;
            }
            bool stalled = false;
            if (it % 64 == 0) {
                if (it > 0 && v - last_window_value <= 1e-17 * std::max(1.0, std::abs(v)))
                    stalled = true;
                last_window_value = v;
            }
            bool try_newton = res.off_violation <= cfg_.tolerance &&
                              (stalled || (it % 32 == 31 && res.supported < 1e-3));
            if (try_newton && newton_polish(w, g, v, res)) {
                v = fg_.value_and_gradient(w, g, pre_, suf_);
                res = residual_of(w, g, v, fg_.r, cfg_.support_floor);
                if (res.internal() <= cfg_.tolerance) {
                    ++it;
                    converged = true;
                    break;
                }
                continue;
            }
            double denom = 0.0;
            for (std::size_t i = 0; i < n; ++i) denom += w[i] * g[i];
            if (stalled || !(v > 0.0) || !(denom > 0.0)) {
                if (!projected_step(w, g, v)) break;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) w[i] = w[i] * g[i] / denom;
            renormalize(w);
        }
        out.w = std::move(w);
        out.value = fg_.value(out.w);
        out.converged = converged;
        out.iterations = it;
        return out;
    }

private:
    bool projected_step(std::vector<double>& w, const std::vector<double>& g, double v) {
        double eta0 = cfg_.step_rule == SolverConfig::StepRule::fixed ? cfg_.fixed_step : 1.0;
        int tries = cfg_.step_rule == SolverConfig::StepRule::fixed ? 1 : 40;
        std::vector<double> z(w.size());
        double eta = eta0;
        for (int k = 0; k < tries; ++k, eta *= 0.5) {
            for (std::size_t i = 0; i < w.size(); ++i) z[i] = w[i] + eta * g[i];
            std::vector<double> cand = project_simplex(z);
            if (fg_.value(cand) > v) {
                w = std::move(cand);
                return true;
            }
        }
        return false;
    }

    // One round of safeguarded Newton steps on the active support; returns
    // true if the internal residual strictly decreased.
    bool newton_polish(std::vector<double>& w, std::vector<double>& g, double v, Residual res) {
        const std::size_t n = w.size();
        std::vector<int> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] > 1e-10) idx.push_back(static_cast<int>(i));
        const int s = static_cast<int>(idx.size());
        if (s < 1 || s > 300) return false;

        std::vector<int> local(n, -1);
        for (int a = 0; a < s; ++a) local[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] = a;

        Eigen::MatrixXd h(s, s);
        Eigen::MatrixXd jac(s + 1, s + 1);
        Eigen::VectorXd rhs(s + 1);
        bool improved = false;
        double best = res.internal();
        std::vector<double> cand(n);
        gscratch_.assign(n, 0.0);

        for (int step = 0; step < 24 && best > cfg_.tolerance; ++step) {
            fg_.hessian_on(w, local, h, pre_, suf_);
            const double mu = static_cast<double>(fg_.r) * v;
            jac.setZero();
            jac.topLeftCorner(s, s) = h;
            for (int a = 0; a < s; ++a) {
                jac(a, s) = -1.0;
                jac(s, a) = 1.0;
            }
            double total = 0.0;
            for (double x : w) total += x;
            for (int a = 0; a < s; ++a)
                rhs(a) = mu - g[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
            rhs(s) = 1.0 - total;

            Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
            if (!lu.isInvertible()) return improved;
            Eigen::VectorXd delta = lu.solve(rhs);

            bool accepted = false;
            double alpha = 1.0;
            for (int bt = 0; bt < 24; ++bt, alpha *= 0.5) {
                cand = w;
                for (int a = 0; a < s; ++a) {
                    std::size_t i = static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
                    cand[i] = std::max(0.0, cand[i] + alpha * delta(a));
                }
                renormalize(cand);
                double cv = fg_.value_and_gradient(cand, gscratch_, pre_, suf_);
                Residual cres = residual_of(cand, gscratch_, cv, fg_.r, cfg_.support_floor);
                if (cres.internal() < best) {
                    w = cand;
                    g = gscratch_;
                    v = cv;
                    best = cres.internal();
                    accepted = true;
                    improved = true;
                    break;
                }
            }
            if (!accepted) break;
        }
        return improved;
    }

    const FlatGraph& fg_;
    const SolverConfig& cfg_;
    std::vector<double> pre_, suf_, gscratch_;
};

void validate_config(const SolverConfig& cfg) {
    if (cfg.restarts < 1) throw InputError("SolverConfig: restarts must be >= 1");
    if (!(cfg.tolerance > 0.0)) throw InputError("SolverConfig: tolerance must be > 0");
    if (cfg.max_iterations < 1) throw InputError("SolverConfig: max_iterations must be >= 1");
}

}  // namespace

double polynomial_value(const Hypergraph& g, const Weighting& w) {
    if (w.size() != g.n()) throw InputError("polynomial_value: weighting size != n");
    return FlatGraph::from(g).value(w.values());
}

std::vector<double> gradient(const Hypergraph& g, const Weighting& w) {
    if (w.size() != g.n()) throw InputError("gradient: weighting size != n");
    FlatGraph fg = FlatGraph::from(g);
    std::vector<double> grad(static_cast<std::size_t>(g.n()), 0.0);
    std::vector<double> pre, suf;
    fg.value_and_gradient(w.values(), grad, pre, suf);
    return grad;
}

double link_weight(const VertexSubsetLink& l, const Weighting& w) {
    double total = 0.0;
    for (const Edge& f : l.links) {
        double p = 1.0;
        for (Vertex x : f) p *= w[x];
        total += p;
    }
    return total;
}

WeightShift weight_shift_delta(const Hypergraph& g, const Weighting& w, Vertex x, Vertex y,
                               double eps) {
    if (x == y) throw InputError("weight_shift_delta: x and y must differ");
    if (w.size() != g.n()) throw InputError("weight_shift_delta: weighting size != n");
    if (x < 1 || x > g.n() || y < 1 || y > g.n())
        throw InputError("weight_shift_delta: vertex outside 1..n");
    if (eps < 0.0 || eps > w[y])
        throw RangeError("weight_shift_delta: requires 0 <= eps <= w(y)");

    const double w_nx = link_weight(link(g, {x}), w);
    const double w_ny = link_weight(link(g, {y}), w);
    const double w_nxy = link_weight(link(g, {x, y}), w);
    const double predicted = eps * (w_nx - w_ny) - eps * eps * w_nxy;

    std::vector<double> values = w.values();
    values[static_cast<std::size_t>(x) - 1] += eps;
    values[static_cast<std::size_t>(y) - 1] -= eps;
    return WeightShift{Weighting(std::move(values), 1e-9), predicted};
}

double kkt_residual(const Hypergraph& g, const Weighting& w, double support_floor) {
    if (w.size() != g.n()) throw InputError("kkt_residual: weighting size != n");
    FlatGraph fg = FlatGraph::from(g);
    std::vector<double> grad(static_cast<std::size_t>(g.n()), 0.0);
    std::vector<double> pre, suf;
    double v = fg.value_and_gradient(w.values(), grad, pre, suf);
    return residual_of(w.values(), grad, v, g.r(), support_floor).supported;
}

SolveReport solve_lagrangian(const Hypergraph& g, const SolverConfig& cfg) {
    validate_config(cfg);
    const int n = g.n();

    if (g.edge_count() == 0) {
        Weighting w = Weighting::uniform(n);
        return SolveReport{0.0, w, 0.0, 0, 0, true, cfg.rng_seed};
    }

    FlatGraph fg = FlatGraph::from(g);
    Ascent ascent(fg, cfg);
    const std::vector<Vertex> verts = g.support();
    const int nv = static_cast<int>(verts.size());

    AscentOutcome best;
    best.value = -std::numeric_limits<double>::infinity();
    std::int64_t total_iterations = 0;
    int restarts_used = 0;

    auto run_seed = [&](const std::vector<double>& w0, std::int64_t budget) {
        AscentOutcome out = ascent.run(w0, budget);
        total_iterations += out.iterations;
        ++restarts_used;
        if (out.value > best.value) best = std::move(out);
    };

    auto uniform_on = [&](const std::vector<Vertex>& vs) {
        std::vector<double> w(static_cast<std::size_t>(n), 0.0);
        for (Vertex x : vs) w[static_cast<std::size_t>(x) - 1] = 1.0 / static_cast<double>(vs.size());
        return w;
    };

    run_seed(uniform_on(verts), cfg.max_iterations);

    const int cutoff = std::min(cfg.support_enumeration_cutoff, 20);
    if (nv <= cutoff) {
        // per-edge occupancy masks over the support positions
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
        for (int a = 0; a < nv; ++a) pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(a)])] = a;
        std::vector<std::uint32_t> edge_masks;
        edge_masks.reserve(g.edges().size());
        for (const Edge& e : g.edges()) {
            std::uint32_t mask = 0;
            for (Vertex v : e) mask |= (1u << pos[static_cast<std::size_t>(v)]);
            edge_masks.push_back(mask);
        }
        const std::uint32_t full = nv >= 32 ? 0xffffffffu : ((1u << nv) - 1u);
        const std::int64_t budget = std::min<std::int64_t>(cfg.max_iterations, 400);
        for (std::uint32_t mask = 1; mask < full; ++mask) {  // full mask already seeded above
            bool induces_edge = false;
            for (std::uint32_t em : edge_masks) {
                if ((em & mask) == em) {
                    induces_edge = true;
                    break;
                }
            }
            if (!induces_edge) continue;
            std::vector<Vertex> subset;
            for (int a = 0; a < nv; ++a)
                if (mask & (1u << a)) subset.push_back(verts[static_cast<std::size_t>(a)]);
            run_seed(uniform_on(subset), budget);
        }
    }

    Rng rng(cfg.rng_seed);
    for (int k = 0; k < cfg.restarts; ++k) {
        std::vector<Vertex> subset;
        for (Vertex x : verts)
            if (rng.next_bool()) subset.push_back(x);
        if (subset.empty()) subset = verts;
        run_seed(uniform_on(subset), cfg.max_iterations);
    }

    if (!best.converged) {
        AscentOutcome polished = ascent.run(best.w, cfg.max_iterations);
        total_iterations += polished.iterations;
        if (polished.converged || polished.value > best.value) best = std::move(polished);
    }

    renormalize(best.w);
    Weighting weighting(best.w);
    double lambda = polynomial_value(g, weighting);
    double resid = kkt_residual(g, weighting, cfg.support_floor);
    return SolveReport{lambda,        weighting, resid, restarts_used,
                       total_iterations, best.converged, cfg.rng_seed};
}

Rational clique_lagrangian(int t, int r) {
    if (r < 2) throw RangeError("clique_lagrangian: r must be >= 2");
    if (t < r) throw RangeError("clique_lagrangian: t must be >= r");
    return Rational(binomial(t, r), checked_pow(t, r));
}

CompressionGain compression_monotonicity_check(const Hypergraph& g, const Weighting& w,
                                               Vertex x, Vertex y) {
    if (w.size() != g.n()) throw InputError("compression_monotonicity_check: weighting size != n");
    if (x >= y) throw InputError("compression_monotonicity_check: requires x < y");
    for (Vertex v = 1; v < g.n(); ++v)
        if (w[v] < w[v + 1])
            throw InputError("compression_monotonicity_check: weighting must be decreasing");

    CompressionGain out;
    out.before = polynomial_value(g, w);
    out.after = polynomial_value(compress_xy(g, x, y), w);
    out.shift_sum = 0.0;
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), y)) continue;
        if (std::binary_search(e.begin(), e.end(), x)) continue;
        Edge ce;
        ce.reserve(e.size());
        for (Vertex v : e)
            if (v != y) ce.push_back(v);
        ce.insert(std::lower_bound(ce.begin(), ce.end(), x), x);
        if (g.contains(ce)) continue;
        double rest = 1.0;
        for (Vertex v : e)
            if (v != y) rest *= w[v];
        out.shift_sum += (w[x] - w[y]) * rest;
    }
    return out;
}

}  // namespace hylag
