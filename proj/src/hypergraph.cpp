#include "hgc/hypergraph.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

Hypergraph Hypergraph::build(int k, int n, std::vector<std::vector<int>> edges) {
    // k = 1 arises for copy hypergraphs of single-edge patterns.
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "uniformity k must be >= 1");
    if (n < 0) throw Error(ErrorKind::InvalidParameter, "vertex count must be >= 0");

    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw Error(ErrorKind::NonUniformEdge, "edge arity differs from k");
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw Error(ErrorKind::VertexOutOfRange, "edge vertex outside [0, N)");
            if (i > 0 && e[i] == e[i - 1])
                throw Error(ErrorKind::NonUniformEdge, "repeated vertex inside edge");
        }
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge in input");

    Hypergraph h;
    h.k_ = k;
    h.n_ = n;
    h.edge_verts_.reserve(edges.size() * k);
    for (const auto& e : edges)
        for (int v : e) h.edge_verts_.push_back(v);
    h.build_incidence();
    return h;
}

void Hypergraph::build_incidence() {
    inc_offset_.assign(n_ + 1, 0);
    for (int32_t v : edge_verts_) inc_offset_[v + 1]++;
    for (int v = 0; v < n_; ++v) inc_offset_[v + 1] += inc_offset_[v];
    inc_edges_.resize(edge_verts_.size());
    std::vector<int32_t> cursor(inc_offset_.begin(), inc_offset_.end() - 1);
    const int m = edge_count();
    for (int e = 0; e < m; ++e)
        for (int i = 0; i < k_; ++i) {
            int v = edge_verts_[static_cast<size_t>(e) * k_ + i];
            inc_edges_[cursor[v]++] = e;
        }
}

long long Hypergraph::induced_edge_count(const VertexSet& s) const {
    long long count = 0;
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
        bool inside = true;
        for (int32_t v : edge(e))
            if (!s.contains(v)) {
                inside = false;
                break;
            }
        count += inside;
    }
    return count;
}

long long Hypergraph::e_at_least(int kprime, const VertexSet& d, const VertexSet& w) const {
    if (kprime < 0 || kprime > k_)
        throw Error(ErrorKind::InvalidParameter, "e_at_least: k' outside [0, k]");
    long long count = 0;
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
        int in_w = 0;
        bool inside = true;
        for (int32_t v : edge(e)) {
            bool w_has = w.contains(v);
            in_w += w_has;
            if (!w_has && !d.contains(v)) {
                inside = false;
                break;
            }
        }
        count += inside && in_w >= kprime;
    }
    return count;
}

long long Hypergraph::deg_at_least(int v, int kprime, const VertexSet& d,
                                   const VertexSet& w) const {
    if (kprime < 0 || kprime > k_ - 1)
        throw Error(ErrorKind::InvalidParameter, "deg_at_least: k' outside [0, k-1]");
    if (v < 0 || v >= n_) throw Error(ErrorKind::VertexOutOfRange, "deg_at_least: bad vertex");
    if (!d.contains(v)) return 0;
    long long count = 0;
    for (int32_t e : incident_edges(v)) {
        int in_w = 0;
        bool inside = true;
        for (int32_t u : edge(e)) {
            bool w_has = w.contains(u);
            if (u != v) in_w += w_has;
            if (!w_has && !d.contains(u)) {
                inside = false;
                break;
            }
        }
        count += inside && in_w >= kprime;
    }
    return count;
}

uint64_t Hypergraph::content_hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(k_));
    mix(static_cast<uint64_t>(n_));
    for (int32_t v : edge_verts_) mix(static_cast<uint64_t>(v));
    return h;
}

}  // namespace hgc
