#include "hgc/generators.hpp"

#include <algorithm>
#include <set>

#include "hgc/errors.hpp"

namespace hgc {

long long binomial_capped(int n, int r, long long cap) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        // result * (n - r + i) / i is always integral at this point
        if (result > cap / (n - r + i) + 1) {
            // conservative: result*(n-r+i) might overflow; it certainly exceeds cap
            return cap;
        }
        result = result * (n - r + i) / i;
        if (result >= cap) return cap;
    }
    return result;
}

int pair_rank(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),... in lex order
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Hypergraph triangle_hypergraph(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidSize, "triangle_hypergraph needs n >= 3");
    int big_n = n * (n - 1) / 2;
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                edges.push_back({pair_rank(n, a, b), pair_rank(n, a, c), pair_rank(n, b, c)});
    return Hypergraph::build(3, big_n, std::move(edges));
}

Hypergraph ap_hypergraph(int n, int len) {
    if (n < 1) throw Error(ErrorKind::InvalidSize, "ap_hypergraph needs n >= 1");
    if (len < 3) throw Error(ErrorKind::InvalidSize, "ap_hypergraph needs len >= 3");
    std::vector<std::vector<int>> edges;
    for (int start = 0; start < n; ++start)
        for (int d = 1; start + (len - 1) * d < n; ++d) {
            std::vector<int> ap(len);
            for (int i = 0; i < len; ++i) ap[i] = start + i * d;
            edges.push_back(std::move(ap));
        }
    return Hypergraph::build(len, n, std::move(edges));
}

namespace {

// Lex rank of a strictly increasing k-subset of [n].
int subset_rank(int n, const std::vector<int>& subset) {
    int k = static_cast<int>(subset.size());
    long long rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            rank += binomial_capped(n - v - 1, k - i - 1, 1ll << 62);
        prev = subset[i];
    }
    return static_cast<int>(rank);
}

}  // namespace

Hypergraph h_copy_hypergraph(const Hypergraph& pattern, int n) {
    if (pattern.edge_count() == 0)
        throw Error(ErrorKind::InvalidParameter, "pattern must have at least one edge");
    const int k = pattern.uniformity();

    // Pattern support: vertices appearing in some edge.
    std::vector<int> support;
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (pattern.degree(v) > 0) support.push_back(v);
    const int pv = static_cast<int>(support.size());
    if (pv > n) throw Error(ErrorKind::PatternTooLarge, "pattern has more vertices than n");

    std::vector<int> pos(pattern.vertex_count(), -1);
    for (int i = 0; i < pv; ++i) pos[support[i]] = i;

    const long long big_n = binomial_capped(n, k, 1ll << 31);
    if (big_n >= (1ll << 31))
        throw Error(ErrorKind::InstanceTooLarge, "C(n, k) exceeds the supported vertex range");
    std::set<std::vector<int>> copies;

    // All injections of the support into [n]: choose the image set, then
    // every assignment of support vertices to it.
    std::vector<int> image(pv);
    std::vector<int> perm(pv);
    auto emit = [&]() {
        std::vector<int> copy_edges;
        copy_edges.reserve(pattern.edge_count());
        std::vector<int> mapped(k);
        for (int e = 0; e < pattern.edge_count(); ++e) {
            auto tuple = pattern.edge(e);
            for (int i = 0; i < k; ++i) mapped[i] = image[perm[pos[tuple[i]]]];
            std::sort(mapped.begin(), mapped.end());
            copy_edges.push_back(subset_rank(n, mapped));
        }
        std::sort(copy_edges.begin(), copy_edges.end());
        copies.insert(copy_edges);
    };

    std::vector<int> choose(pv);
    for (int i = 0; i < pv; ++i) choose[i] = i;
    for (;;) {
        for (int i = 0; i < pv; ++i) image[i] = choose[i];
        for (int i = 0; i < pv; ++i) perm[i] = i;
        do {
            emit();
        } while (std::next_permutation(perm.begin(), perm.end()));

        // next combination of pv elements from [n]
        int i = pv - 1;
        while (i >= 0 && choose[i] == n - pv + i) --i;
        if (i < 0) break;
        ++choose[i];
        for (int j = i + 1; j < pv; ++j) choose[j] = choose[j - 1] + 1;
    }

    std::vector<std::vector<int>> edges(copies.begin(), copies.end());
    return Hypergraph::build(pattern.edge_count(), static_cast<int>(big_n), std::move(edges));
}

VertexSet sample_uniform_mset(int n, int m, Rng& rng) {
    if (m < 0 || m > n) throw Error(ErrorKind::InvalidSize, "sample size outside [0, N]");
    // Floyd's algorithm: m iterations, uniform over m-subsets.
    VertexSet s(n);
    for (int j = n - m; j < n; ++j) {
        int t = static_cast<int>(rng.below(static_cast<uint64_t>(j) + 1));
        if (s.contains(t))
            s.insert(j);
        else
            s.insert(t);
    }
    return s;
}

VertexSet sample_binomial_set(int n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw Error(ErrorKind::InvalidParameter, "p outside [0, 1]");
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(p)) s.insert(v);
    return s;
}

Hypergraph random_k_graph(int k, int n, long long m, Rng& rng) {
    const long long total = binomial_capped(n, k, 1ll << 62);
    if (m > total) throw Error(ErrorKind::TooManyEdges, "more edges requested than C(N, k)");

    std::set<std::vector<int>> chosen;
    if (total <= (1ll << 20)) {
        // Enumerate all k-subsets and take a uniform m-subset of them.
        std::vector<std::vector<int>> all;
        all.reserve(static_cast<size_t>(total));
        std::vector<int> cur(k);
        for (int i = 0; i < k; ++i) cur[i] = i;
        if (k <= n)
            for (;;) {
                all.push_back(cur);
                int i = k - 1;
                while (i >= 0 && cur[i] == n - k + i) --i;
                if (i < 0) break;
                ++cur[i];
                for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
            }
        VertexSet pick = sample_uniform_mset(static_cast<int>(all.size()),
                                             static_cast<int>(m), rng);
        pick.for_each([&](int idx) { chosen.insert(all[idx]); });
    } else {
        // Rejection sampling; m << C(N,k) in this regime.
        while (static_cast<long long>(chosen.size()) < m) {
            VertexSet s = sample_uniform_mset(n, k, rng);
            chosen.insert(s.ids());
        }
    }
    std::vector<std::vector<int>> edges(chosen.begin(), chosen.end());
    return Hypergraph::build(k, n, std::move(edges));
}

}  // namespace hgc
