#include "hgc/removal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hgc/errors.hpp"
#include "hgc/generators.hpp"

namespace hgc {

namespace {

// Induced sub-hypergraph edges of H[I], as vertex lists.
std::vector<std::vector<int>> induced_edges(const Hypergraph& h, const VertexSet& i_set) {
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < h.edge_count(); ++e) {
        bool inside = true;
        for (int32_t v : h.edge(e))
            if (!i_set.contains(v)) {
                inside = false;
                break;
            }
        if (inside) edges.emplace_back(h.edge(e).begin(), h.edge(e).end());
    }
    return edges;
}

// Greedy lower bound for the cover: a maximal set of pairwise disjoint edges.
int disjoint_edge_bound(const std::vector<std::vector<int>>& edges,
                        const std::vector<char>& covered, const VertexSet& removed) {
    std::vector<char> used(removed.universe(), 0);
    int bound = 0;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (covered[e]) continue;
        bool free = true;
        for (int v : edges[e])
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int v : edges[e]) used[v] = 1;
        ++bound;
    }
    return bound;
}

struct CoverSearch {
    const std::vector<std::vector<int>>& edges;
    std::vector<std::vector<int>> edges_of_vertex;  // indexed by vertex id
    std::vector<char> covered;
    std::vector<int> cover_count;  // per edge: how many chosen vertices hit it
    VertexSet chosen;
    std::optional<VertexSet> best;

    explicit CoverSearch(const std::vector<std::vector<int>>& e, int universe)
        : edges(e), covered(e.size(), 0), cover_count(e.size(), 0), chosen(universe) {
        edges_of_vertex.resize(universe);
        for (size_t i = 0; i < e.size(); ++i)
            for (int v : e[i]) edges_of_vertex[v].push_back(static_cast<int>(i));
    }

    void take(int v) {
        chosen.insert(v);
        for (int e : edges_of_vertex[v])
            if (cover_count[e]++ == 0) covered[e] = 1;
    }
    void untake(int v) {
        chosen.erase(v);
        for (int e : edges_of_vertex[v])
            if (--cover_count[e] == 0) covered[e] = 0;
    }

    int first_uncovered() const {
        for (size_t e = 0; e < edges.size(); ++e)
            if (!covered[e]) return static_cast<int>(e);
        return -1;
    }

    // Depth-limited search for a cover of size <= limit.
    bool solve(int limit) {
        int e = first_uncovered();
        if (e < 0) {
            best = chosen;
            return true;
        }
        if (limit == 0) return false;
        if (disjoint_edge_bound(edges, covered, chosen) > limit) return false;
        for (int v : edges[e]) {
            take(v);
            if (solve(limit - 1)) {
                untake(v);
                return true;
            }
            untake(v);
        }
        return false;
    }
};

}  // namespace

RemovabilityReport min_removal_witness(const Hypergraph& h, const VertexSet& i_set,
                                       int r_budget) {
    RemovabilityReport report;
    report.r_budget = r_budget;
    auto edges = induced_edges(h, i_set);
    report.induced_edges = static_cast<long long>(edges.size());

    if (edges.empty()) {
        report.witness = VertexSet(i_set.universe());
        report.min_witness_size = 0;
        report.exact = true;
        return report;
    }

    const bool exact_regime = edges.size() <= 10000 && r_budget <= 20;
    if (exact_regime) {
        CoverSearch search(edges, i_set.universe());
        // Iterative deepening returns the minimum cover size directly.
        for (int limit = 1; limit <= r_budget; ++limit) {
            if (search.solve(limit)) {
                report.witness = search.best;
                report.min_witness_size = search.best->size();
                report.exact = true;
                return report;
            }
        }
        report.exact = true;  // exhausted: no cover within budget exists
        return report;
    }

    // Greedy max-degree fallback: repeatedly remove the vertex hitting the
    // most uncovered edges (lowest id on ties).
    VertexSet removed(i_set.universe());
    std::vector<char> covered(edges.size(), 0);
    while (true) {
        std::vector<long long> gain(i_set.universe(), 0);
        bool any = false;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (covered[e]) continue;
            any = true;
            for (int v : edges[e]) gain[v]++;
        }
        if (!any) break;
        int best = -1;
        long long best_gain = 0;
        for (int v = 0; v < i_set.universe(); ++v)
            if (gain[v] > best_gain) {
                best_gain = gain[v];
                best = v;
            }
        removed.insert(best);
        for (size_t e = 0; e < edges.size(); ++e)
            if (!covered[e])
                for (int v : edges[e])
                    if (v == best) {
                        covered[e] = 1;
                        break;
                    }
    }
    report.exact = false;
    report.min_witness_size = removed.size();
    if (removed.size() <= r_budget) report.witness = removed;
    return report;
}

Rational m_k_density(const Hypergraph& pattern) {
    const int k = pattern.uniformity();
    const int m = pattern.edge_count();
    if (m > 24)
        throw Error(ErrorKind::InstanceTooLarge, "m_k_density enumerates 2^e subsets; e <= 24");
    bool found = false;
    Rational best{0, 1};
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        VertexSet support(pattern.vertex_count());
        int edge_total = 0;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                ++edge_total;
                for (int32_t v : pattern.edge(e)) support.insert(v);
            }
        int v_total = support.size();
        if (v_total <= k) continue;
        Rational cand{edge_total - 1, v_total - k};
        if (!found || static_cast<long long>(cand.num) * best.den >
                          static_cast<long long>(best.num) * cand.den) {
            best = cand;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorKind::NoValidSubgraph, "no subgraph with v(H') > k");
    long long g = std::gcd(best.num, best.den);
    if (g > 0) {
        best.num /= g;
        best.den /= g;
    }
    return best;
}

bool is_removable(const Hypergraph& h, double s, double r) {
    const int n = h.vertex_count();
    if (n > 22)
        throw Error(ErrorKind::InstanceTooLarge, "removability audit enumerates 2^N subsets");
    const int budget = static_cast<int>(std::floor(r));
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet i_set(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) i_set.insert(v);
        if (static_cast<double>(h.induced_edge_count(i_set)) >= s) continue;
        RemovabilityReport rep = min_removal_witness(h, i_set, budget);
        if (!rep.witness) return false;
    }
    return true;
}

TransferenceStats transference_experiment(const Hypergraph& h, double gamma, double alpha,
                                          double p, int trials, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorKind::InvalidParameter, "p outside [0, 1]");
    const int n = h.vertex_count();
    const int k = h.uniformity();

    if (!is_removable(h, gamma * h.edge_count(), alpha * n))
        throw Error(ErrorKind::PreAuditFailed,
                    "H is not (gamma e(H), alpha N)-removable at these parameters");

    TransferenceStats stats;
    stats.gamma = gamma;
    stats.alpha = alpha;
    stats.p = p;
    stats.conclusion_s = gamma * std::pow(alpha, k) * h.edge_count() * std::pow(p, k);
    stats.conclusion_r = 3.0 * alpha * n * p;
    stats.trials = trials;
    const int budget = static_cast<int>(std::floor(stats.conclusion_r));

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, "transference-trial", static_cast<uint64_t>(t));
        VertexSet w = sample_binomial_set(n, p, rng);
        TransferenceTrial trial;
        trial.index = t;
        trial.w_size = w.size();
        trial.pass = true;

        auto w_ids = w.ids();
        const int wn = static_cast<int>(w_ids.size());
        auto check_subset = [&](const VertexSet& i_set) {
            if (static_cast<double>(h.induced_edge_count(i_set)) >= stats.conclusion_s)
                return true;  // hypothesis empty for this subset
            RemovabilityReport rep = min_removal_witness(h, i_set, budget);
            return rep.witness.has_value();
        };

        if (wn <= 18) {
            for (uint32_t mask = 0; mask < (1u << wn); ++mask) {
                VertexSet i_set(n);
                for (int b = 0; b < wn; ++b)
                    if (mask & (1u << b)) i_set.insert(w_ids[b]);
                trial.subsets_checked++;
                if (!check_subset(i_set)) {
                    trial.pass = false;
                    trial.failure = i_set;
                    break;
                }
            }
        } else {
            // Importance-sample subsets near the edge-count threshold: random
            // sizes biased to larger subsets, which carry the induced edges.
            trial.sampled = true;
            stats.any_sampled = true;
            for (int draw = 0; draw < (1 << 14); ++draw) {
                int size = static_cast<int>(rng.below(static_cast<uint64_t>(wn) + 1));
                size = std::max(size, static_cast<int>(rng.below(static_cast<uint64_t>(wn) + 1)));
                VertexSet pick = sample_uniform_mset(wn, size, rng);
                VertexSet i_set(n);
                pick.for_each([&](int b) { i_set.insert(w_ids[b]); });
                trial.subsets_checked++;
                if (!check_subset(i_set)) {
                    trial.pass = false;
                    trial.failure = i_set;
                    break;
                }
            }
        }
        stats.passes += trial.pass;
        stats.per_trial.push_back(std::move(trial));
    }
    return stats;
}

}  // namespace hgc
