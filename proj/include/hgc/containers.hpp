#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/janson.hpp"
#include "hgc/rng.hpp"
#include "hgc/schedule.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// The pair (F, (F_1,...,F_{k-1})) a container is computed from. F has
/// exactly ceil(eps m) elements after padding and every F_i is a subset
/// of F. `epsilon` is carried for serialization only.
struct Fingerprint {
    int m = 0;
    double epsilon = 0.0;
    VertexSet f;
    std::vector<VertexSet> tuple;  // F_1 ... F_{k-1}
};

/// Versioned text record: line 1 "m epsilon k", line 2 the sorted ids of F,
/// lines 3..k+1 the sorted ids of F_1..F_{k-1} (possibly empty lines).
std::string serialize_fingerprint(const Fingerprint& fp);
Fingerprint parse_fingerprint(const std::string& text, int universe);

/// The nested level sets D_k ⊇ D_{k-1} ⊇ ... ⊇ D_0 of one container
/// computation; the container is levels[0].
struct ContainerTrace {
    std::vector<VertexSet> levels;          // levels[i] = D_i, i in [0, k]
    std::vector<double> thresholds;         // t_{k'} for k' in [0, k-1]
    std::vector<long long> tuple_counts;    // e_{k'}(D_{k'}, F_{k'}) for k' in [1, k-1]
    long long container_edges = 0;          // e(D_0)

    const VertexSet& container() const { return levels[0]; }
};

/// The container function f_m: recomputes the degree cascade from the
/// fingerprint tuple alone. Pure function of (H, fp, schedule); it never
/// sees the sampled set the fingerprint came from.
///
/// Level rule: D_{k'} keeps v in D_{k'+1} with deg_{k'}(v, D_{k'+1}, F_{k'})
/// below t_{k'}/N; vertices of degree zero are always kept, which makes the
/// rule agree with the strict comparison whenever t_{k'} > 0 and keeps
/// edgeless instances mapping to the full vertex set. The final level prunes
/// by plain degree inside H[D_1].
ContainerTrace compute_container(const Hypergraph& h, const Fingerprint& fp,
                                 const ConstantSchedule& schedule);

struct SaturationCheck {
    bool saturating = false;
    long long witness_count = 0;  // |{v in D : deg_{k'}(v, D, W) >= t/N}|
};

/// Exact evaluation of the (k', alpha, t)-saturating predicate for D.
SaturationCheck is_saturating(const Hypergraph& h, const VertexSet& w, const VertexSet& d,
                              int kprime, double alpha, double t);

/// Random search for a saturating subset W of iprime: each candidate takes
/// every element independently with probability xi/2 and is accepted when
/// |W| <= ceil(xi m) and the saturating predicate holds at threshold
/// t_{k'}(m). Asserts the caller's density precondition
/// e_{k'}(D, I') >= gamma_{k'} e(H) q^{k'} (throws PreconditionViolated).
/// Returns nullopt after schedule.saturation_max_retries failed samples.
std::optional<VertexSet> find_saturating_set(const Hypergraph& h, const VertexSet& iprime,
                                             const VertexSet& d, int kprime, int m,
                                             const ConstantSchedule& schedule, Rng& rng);

struct DeletionResult {
    bool ok = false;
    VertexSet removed;  // X
    // On failure: the first violated (s, s') in scan order with its counts.
    int s = 0;
    int sprime = 0;
    long long count = 0;
    double threshold = 0.0;
    bool exhausted = false;  // failure certified by exhaustive search over X
};

/// Greedy deletion pruning: while some (s, s') has more family members
/// meeting I \ X in >= s' elements than T |S_s| (m/N)^{s'}, remove the
/// vertex of I \ X covering the most currently-violating members (ties to
/// the lowest id). Succeeds iff all thresholds hold with |X| <= beta m.
/// When the greedy pass gives up on an instance with |I| <= 20, every X
/// within the budget is tried before failing, so a failure on small inputs
/// certifies that no admissible X exists.
DeletionResult deletion_prune(const std::vector<UnionSet>& family, const VertexSet& i_set,
                              int m, double t_del, double beta);

enum class OutcomeTag { P1, P2, Bad };

enum class BadReason {
    None,
    SaturationExhausted,
    DeletionBudgetExceeded,
    FingerprintOverflow,
    IterationGuardExceeded,
};

const char* to_string(OutcomeTag tag);
const char* to_string(BadReason reason);

struct LevelStats {
    int kprime = 0;
    int iterations = 0;       // saturation steps taken at this level
    long long exit_count = 0; // e_{k'}(D_{k'}, I') when the loop exited
    double guard = 0.0;       // gamma_{k'} e(H) q^{k'}
    int min_shrink = -1;      // smallest per-step |D| decrease, -1 if no step
};

struct ExtractionOutcome {
    OutcomeTag tag = OutcomeTag::Bad;

    // P1 payload.
    long long induced_edges = 0;
    double p1_threshold = 0.0;

    // P2 payload.
    Fingerprint fingerprint;
    ContainerTrace trace;
    VertexSet residue;  // R = I' \ D_0
    VertexSet pruned;   // X from the deletion step
    std::vector<LevelStats> levels;

    // Bad payload.
    BadReason reason = BadReason::None;
    std::string detail;
};

/// Randomized fingerprint extraction: P1 when I is dense, otherwise the
/// deletion step carves X, the per-level saturation loops grow the tuple
/// until every density guard holds, and the fingerprint is assembled and
/// padded to ceil(eps m). Any failed search folds into a Bad outcome.
ExtractionOutcome extract_fingerprint(const Hypergraph& h, const VertexSet& i_set,
                                      const ConstantSchedule& schedule, Rng& rng);

/// As above with the union-set families precomputed (they depend on H only;
/// callers running many extractions share one copy).
ExtractionOutcome extract_fingerprint(const Hypergraph& h, const VertexSet& i_set,
                                      const ConstantSchedule& schedule, Rng& rng,
                                      const std::vector<UnionSet>& families);

struct VerifyReport {
    bool containment = false;       // I ⊆ F ∪ D_0
    bool container_sparse = false;  // e(D_0) <= eps e(H)
    bool fingerprint_size = false;  // |F| == ceil(eps m)
    bool tuple_subsets = false;     // every F_i ⊆ F
    long long container_edges = 0;
    double sparsity_limit = 0.0;
    uint64_t container_hash = 0;

    bool all_passed() const {
        return containment && container_sparse && fingerprint_size && tuple_subsets;
    }
};

/// Soundness check for a P2 outcome. The container is recomputed from the
/// *serialized* fingerprint (round-tripped through the text format) so that
/// hidden state in the outcome cannot leak into the check.
VerifyReport verify_container(const Hypergraph& h, const VertexSet& i_set,
                              const ExtractionOutcome& outcome,
                              const ConstantSchedule& schedule);

}  // namespace hgc
