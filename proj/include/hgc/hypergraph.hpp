#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgc/vertex_set.hpp"

namespace hgc {

/// Immutable k-uniform hypergraph on N labeled vertices.
///
/// Canonical form: every edge is a strictly increasing k-tuple and the edge
/// sequence is sorted lexicographically with no duplicates. A per-vertex
/// incidence index (CSR layout) backs the degree primitives. Instances are
/// safe to share across threads after construction.
class Hypergraph {
public:
    /// Validates and canonicalizes `edges` (tuples may arrive unsorted).
    /// Throws NonUniformEdge / VertexOutOfRange / DuplicateEdge.
    static Hypergraph build(int k, int n, std::vector<std::vector<int>> edges);

    int uniformity() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_verts_.size() / k_); }

    std::span<const int32_t> edge(int e) const {
        return {edge_verts_.data() + static_cast<size_t>(e) * k_, static_cast<size_t>(k_)};
    }

    /// Indices of the edges containing v.
    std::span<const int32_t> incident_edges(int v) const {
        return {inc_edges_.data() + inc_offset_[v],
                static_cast<size_t>(inc_offset_[v + 1] - inc_offset_[v])};
    }

    int degree(int v) const { return inc_offset_[v + 1] - inc_offset_[v]; }

    VertexSet full_vertex_set() const { return VertexSet::full(n_); }

    /// e(S): edges with all k vertices inside S.
    long long induced_edge_count(const VertexSet& s) const;

    bool is_independent(const VertexSet& s) const { return induced_edge_count(s) == 0; }

    /// e_{k'}(D, W): edges of H[D ∪ W] intersecting W in at least k' vertices.
    /// k' = 0 counts every edge of H[D ∪ W].
    long long e_at_least(int kprime, const VertexSet& d, const VertexSet& w) const;

    /// deg_{k'}(v, D, W): edges of H[D ∪ W] that contain v and intersect
    /// W \ {v} in at least k' vertices. Returns 0 for v outside D.
    /// k' = 0 degenerates to the degree of v in H[D ∪ W].
    long long deg_at_least(int v, int kprime, const VertexSet& d, const VertexSet& w) const;

    /// Content hash of the canonical form (k, N, sorted edges).
    uint64_t content_hash() const;

    bool operator==(const Hypergraph& o) const {
        return k_ == o.k_ && n_ == o.n_ && edge_verts_ == o.edge_verts_;
    }

private:
    Hypergraph() = default;
    void build_incidence();

    int k_ = 2;
    int n_ = 0;
    std::vector<int32_t> edge_verts_;   // edge e occupies [e*k, (e+1)*k), sorted
    std::vector<int32_t> inc_offset_;   // size n+1
    std::vector<int32_t> inc_edges_;
};

}  // namespace hgc
