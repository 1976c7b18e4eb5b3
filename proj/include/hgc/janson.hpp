#pragma once

#include <optional>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// mu, Delta and the tail bound exp(-mu^2 / (2 (mu + Delta))) at a given m.
struct JansonProfile {
    int m = 0;
    double q = 0.0;          // m / N
    double mu = 0.0;         // e(H) q^k
    double delta = 0.0;      // sum over ordered intersecting pairs of q^{|e u e'|}
    double delta_hat = 0.0;  // mu + delta
    double bound = 1.0;      // 1 when mu == 0
};

/// Census of edge pairs by union size s in [k, 2k]:
///   distinct_unions[s]  — number of distinct sets e u e' of size s
///                         (s = k collects the edges themselves),
///   ordered_pairs[s]    — ordered pairs (e, e'), e != e', e n e' != {} with
///                         |e u e'| = s (nonzero only for s in [k+1, 2k-1]).
struct PairCensus {
    int k = 0;
    std::vector<long long> distinct_unions;  // indexed by s, size 2k+1
    std::vector<long long> ordered_pairs;    // indexed by s, size 2k+1

    long long total_ordered_intersecting() const {
        long long t = 0;
        for (long long c : ordered_pairs) t += c;
        return t;
    }
};

/// One distinct union set together with its size.
struct UnionSet {
    int s = 0;
    VertexSet members;
};

double mu(const Hypergraph& h, int m);
double delta(const Hypergraph& h, int m);
JansonProfile janson_bound(const Hypergraph& h, int m);

/// Exact pair census; intersecting pairs are enumerated through the
/// incidence index in O(sum_v deg(v)^2), disjoint unions by a pair sweep.
PairCensus pair_census(const Hypergraph& h);

/// Materialized distinct union sets for all s in [k, 2k] (the families the
/// deletion step prunes against), sorted by (s, members) for determinism.
std::vector<UnionSet> union_families(const Hypergraph& h);

/// |{ S in S_s : |S n Q| >= s' }|; s' <= 0 counts all of S_s.
long long count_S_intersections(const Hypergraph& h, const VertexSet& q, int s, int sprime);

/// Ordered pairs (e, e') with |e u e'| = s, |e n W| >= k', |e' n W| >= k'
/// and e n e' n W nonempty. Requires k+1 <= s <= 2k-1.
long long count_lambda(const Hypergraph& h, const VertexSet& w, int kprime, int s);

struct VarianceRow {
    int s = 0;
    long long lambda = 0;     // |Lambda_s(W, k')|
    int ell = 0;              // s + 2k' - 2k
    int ell_prime = 0;        // s + 2k' + 1 - 2k
    double bound_term = 0.0;  // T * |S_s| * q^{ell(s)}
};

/// Second-moment diagnostics for e_{k'}(D, W): per-s Lambda counts, the
/// degree square sum over all vertices against D = V, and the bound-side
/// terms for caller-supplied T and q.
struct VarianceDiagnostic {
    int kprime = 0;
    double t_factor = 0.0;
    double q = 0.0;
    std::vector<VarianceRow> rows;
    long long lambda_total = 0;
    long long sum_deg_sq = 0;  // sum_v deg_{k'}(v, V, W)^2
};

VarianceDiagnostic variance_diagnostic(const Hypergraph& h, const VertexSet& w, int kprime,
                                       double t_factor, double q);

/// Smallest m in [1, N] with Delta(m) <= B mu(m)^2 / m, or nullopt.
/// Binary search is used only when the ratio Delta(m) m / mu(m)^2 audits as
/// non-increasing over the full range; otherwise falls back to linear scan.
std::optional<int> find_m0(const Hypergraph& h, double b);

/// True when the ratio Delta(m) m / mu(m)^2 is non-increasing on [1, N]
/// within a small relative slack (the audit gating binary search).
bool m0_ratio_monotone(const Hypergraph& h);

/// Linear-scan and binary-search variants, exposed for cross-checking.
std::optional<int> find_m0_linear(const Hypergraph& h, double b);
std::optional<int> find_m0_binary(const Hypergraph& h, double b);

}  // namespace hgc
