#include "hylag/enumeration.hpp"

#include <algorithm>
#include <string>

namespace hylag {

namespace {

struct DownSetSearch {
    int r;
    std::int64_t m;
    std::vector<Edge> universe;         // all candidate edges, colex order
    std::vector<std::vector<int>> covers;  // immediate predecessor indices
    std::vector<char> chosen;
    std::vector<int> stack;
    const std::function<void(const Hypergraph&)>* yield;

    void emit() {
        std::vector<Edge> edges;
        edges.reserve(stack.size());
        int n = r;
        for (int idx : stack) {
            edges.push_back(universe[static_cast<std::size_t>(idx)]);
            n = std::max(n, edges.back().back());
        }
        (*yield)(Hypergraph(r, n, std::move(edges)));
    }

    void dfs(int last) {
        if (static_cast<std::int64_t>(stack.size()) == m) {
            emit();
            return;
        }
        const std::int64_t need = m - static_cast<std::int64_t>(stack.size());
        const int total = static_cast<int>(universe.size());
        for (int idx = last + 1; idx <= total - static_cast<int>(need); ++idx) {
            bool ok = true;
            for (int pre : covers[static_cast<std::size_t>(idx)]) {
                if (!chosen[static_cast<std::size_t>(pre)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[static_cast<std::size_t>(idx)] = 1;
            stack.push_back(idx);
            dfs(idx);
            stack.pop_back();
            chosen[static_cast<std::size_t>(idx)] = 0;
        }
    }
};

}  // namespace

void enumerate_left_compressed(int r, std::int64_t m, int n_max,
                               const std::function<void(const Hypergraph&)>& yield) {
    if (r < 2) throw InputError("enumerate_left_compressed: r must be >= 2");
    if (m < 0) throw RangeError("enumerate_left_compressed: negative edge count");
    if (n_max < r) throw InputError("enumerate_left_compressed: n_max must be >= r");
    if (m == 0) {
        yield(Hypergraph(r, r, {}));
        return;
    }
    // a vertex v forces a chain of v-r+1 predecessor edges, so no member
    // uses labels beyond m+r-1
    const int n_eff = static_cast<int>(std::min<std::int64_t>(n_max, m + r - 1));
    if (n_eff < r) return;
    const std::int64_t universe_size = binomial(n_eff, r);
    if (m > universe_size) return;

    DownSetSearch search;
    search.r = r;
    search.m = m;
    search.yield = &yield;
    search.universe.reserve(static_cast<std::size_t>(universe_size));
    for (std::int64_t k = 0; k < universe_size; ++k)
        search.universe.push_back(colex_unrank(k, r));
    search.covers.resize(search.universe.size());
    for (std::size_t idx = 0; idx < search.universe.size(); ++idx) {
        const Edge& e = search.universe[idx];
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] - 1 < 1) continue;
            if (j > 0 && e[j - 1] >= e[j] - 1) continue;
            Edge pred = e;
            --pred[j];
            search.covers[idx].push_back(static_cast<int>(colex_rank(pred)));
        }
    }
    search.chosen.assign(search.universe.size(), 0);
    search.dfs(-1);
}

std::vector<Hypergraph> left_compressed_graphs(int r, std::int64_t m, int n_max) {
    std::vector<Hypergraph> out;
    enumerate_left_compressed(r, m, n_max, [&](const Hypergraph& g) { out.push_back(g); });
    return out;
}

P2MaxResult p2_max_bruteforce(std::int64_t m, int r, int t) {
    if (r < 2 || t < r) throw InputError("p2_max_bruteforce: bad (r, t)");
    const std::int64_t universe_size = binomial(t, r);
    if (m < 0 || m > universe_size)
        throw RangeError("p2_max_bruteforce: m outside 0..C(t,r)");
    if (universe_size > 30 || m > 8)
        throw InfeasibleError("p2_max_bruteforce: refusing C(t,r) > 30 or m > 8 (" +
                              std::to_string(universe_size) + " edges available)");

    std::vector<Edge> universe;
    universe.reserve(static_cast<std::size_t>(universe_size));
    for (std::int64_t k = 0; k < universe_size; ++k) universe.push_back(colex_unrank(k, r));

    P2MaxResult result{-1, {}};
    const int u = static_cast<int>(universe_size);
    const int k = static_cast<int>(m);
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j;
    std::vector<std::int64_t> deg(static_cast<std::size_t>(t));

    auto evaluate = [&]() {
        std::fill(deg.begin(), deg.end(), 0);
        for (int j : pick)
            for (Vertex v : universe[static_cast<std::size_t>(j)])
                ++deg[static_cast<std::size_t>(v) - 1];
        std::int64_t total = 0;
        for (std::int64_t d : deg) total += d * d;
        if (total > result.max_p2) {
            result.max_p2 = total;
            result.argmax.clear();
        }
        if (total == result.max_p2) {
            std::vector<Edge> edges;
            edges.reserve(pick.size());
            for (int j : pick) edges.push_back(universe[static_cast<std::size_t>(j)]);
            result.argmax.emplace_back(r, t, std::move(edges));
        }
    };

    if (k == 0) {
        result.max_p2 = 0;
        result.argmax.emplace_back(r, t, std::vector<Edge>{});
        return result;
    }
    while (true) {
        evaluate();
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == u - k + j) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l) - 1] + 1;
    }
    return result;
}

}  // namespace hylag
