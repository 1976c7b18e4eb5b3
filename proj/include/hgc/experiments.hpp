#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/containers.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/janson.hpp"
#include "hgc/schedule.hpp"

namespace hgc {

struct BadRecord {
    long long trial = 0;          // trial index or subset rank
    std::vector<int> subset_ids;  // the sampled set
    BadReason reason = BadReason::None;
    std::string detail;
};

/// Aggregated trichotomy counts. All accumulators are integers so results
/// are identical under any thread partition of the trials.
struct TrichotomySummary {
    int m = 0;
    long long trials = 0;
    long long p1 = 0;
    long long p2 = 0;
    long long bad = 0;
    long long verify_failures = 0;        // must stay 0
    long long container_size_sum = 0;     // sum of |D_0| over P2 outcomes
    long long container_edges_sum = 0;    // sum of e(D_0) over P2 outcomes
    int max_level_iterations = 0;         // saturation loop maximum observed
    int iteration_cap = 0;                // ceil(1/alpha) + 8 bound that applied
    std::vector<BadRecord> bad_exemplars;
    uint64_t seed = 0;

    double p1_fraction() const { return trials ? static_cast<double>(p1) / trials : 0.0; }
    double p2_fraction() const { return trials ? static_cast<double>(p2) / trials : 0.0; }
    double bad_fraction() const { return trials ? static_cast<double>(bad) / trials : 0.0; }
    double mean_container_size() const {
        return p2 ? static_cast<double>(container_size_sum) / p2 : 0.0;
    }
};

/// Monte Carlo trichotomy measurement over uniformly sampled m-sets. Every
/// P2 outcome is re-verified from its serialized fingerprint; a verify
/// failure is counted and must be treated as a hard error by callers.
/// Per-trial randomness: the sample stream is keyed by the trial index and
/// the extraction stream by the sampled set's hash.
TrichotomySummary mc_trichotomy(const Hypergraph& h, int m, const ConstantSchedule& schedule,
                                long long trials, uint64_t seed, int threads = 1);

/// Exhaustive classification of every m-subset (C(N, m) <= 10^6 enforced).
/// Per-subset extraction seeds derive from (seed, subset hash), making the
/// BAD list a pure function of the instance and master seed.
TrichotomySummary brute_force_scan(const Hypergraph& h, int m,
                                   const ConstantSchedule& schedule, uint64_t seed,
                                   int threads = 1);

struct IndependenceEstimate {
    long long trials = 0;
    long long hits = 0;
    double estimate = 0.0;
    double lo = 0.0;  // Wilson 95% interval
    double hi = 0.0;
};

/// Monte Carlo estimate of Pr[uniform m-set is independent]; trials >= 100.
IndependenceEstimate mc_independence(const Hypergraph& h, int m, long long trials,
                                     uint64_t seed, int threads = 1);

struct SweepConfig {
    std::vector<int> m_values;
    long long trichotomy_trials = 1000;
    long long independence_trials = 1000;
    uint64_t seed = 0;
    int threads = 1;
    std::string out_dir = ".";
};

struct SweepResult {
    std::string csv_path;
    std::string manifest_path;
    bool janson_bound_respected = true;  // indep_est <= bound + 3 SE at every m
    long long verify_failures = 0;
};

/// Orchestrates janson profiles, trichotomy and independence estimates over
/// an m-grid. Writes sweep.csv (columns m,mu,delta,bound,p1,p2,bad,
/// indep_est,indep_lo,indep_hi) and manifest.json; reruns with the same
/// config reproduce both files byte for byte.
SweepResult sweep_report(const Hypergraph& h, const ConstantSchedule& schedule,
                         const SweepConfig& config);

/// %.12g formatting used by every report writer (fixed so reruns are
/// byte-identical).
std::string fmt_g(double x);

}  // namespace hgc
