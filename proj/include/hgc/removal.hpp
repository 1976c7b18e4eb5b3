#pragma once

#include <optional>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/rng.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// Result of a removal-witness search on one vertex set.
struct RemovabilityReport {
    long long induced_edges = 0;        // e(I) before any removal
    int r_budget = 0;                   // requested budget
    std::optional<VertexSet> witness;   // smallest X with I \ X independent, if <= budget
    int min_witness_size = -1;          // size of the optimum when known
    bool exact = false;                 // branch-and-bound completed (vs greedy bound)
};

/// Finds a minimum X ⊆ I with I \ X independent (minimum vertex cover of
/// H[I]). Exact branch-and-bound runs when e(H[I]) <= 10^4 and the budget
/// is <= 20; larger instances fall back to greedy max-degree with
/// exact=false. Witness vertices tie-break to lowest id.
RemovabilityReport min_removal_witness(const Hypergraph& h, const VertexSet& i_set,
                                       int r_budget);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / den; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// m_k(pattern) = max over subgraphs H' with v(H') > k of
/// (e(H') - 1) / (v(H') - k), as an exact reduced rational. Subgraphs are
/// edge subsets with isolated vertices trimmed. Throws NoValidSubgraph when
/// no subgraph has more than k non-isolated vertices.
Rational m_k_density(const Hypergraph& pattern);

/// Exhaustive removability audit: every I ⊆ V with e(I) < s admits X of
/// size <= r with I \ X independent. Enforces N <= 22.
bool is_removable(const Hypergraph& h, double s, double r);

struct TransferenceTrial {
    int index = 0;
    int w_size = 0;
    bool pass = false;
    long long subsets_checked = 0;
    bool sampled = false;               // subset space sampled, not enumerated
    std::optional<VertexSet> failure;   // an I violating the conclusion
};

struct TransferenceStats {
    double gamma = 0.0;
    double alpha = 0.0;
    double p = 0.0;
    double conclusion_s = 0.0;  // gamma alpha^k e(H) p^k
    double conclusion_r = 0.0;  // 3 alpha N p
    int trials = 0;
    int passes = 0;
    bool any_sampled = false;
    std::vector<TransferenceTrial> per_trial;
};

/// Random-sparsification transference experiment: pre-audits H as
/// (gamma e(H), alpha N)-removable (PreAuditFailed otherwise), then per
/// trial samples W binomially with probability p and checks that every
/// I ⊆ W with e(I) < gamma alpha^k e(H) p^k admits a removal witness of
/// size <= 3 alpha N p. Subset spaces larger than 2^18 are importance
/// sampled and the trial is flagged as sampled.
TransferenceStats transference_experiment(const Hypergraph& h, double gamma, double alpha,
                                          double p, int trials, uint64_t seed);

}  // namespace hgc
