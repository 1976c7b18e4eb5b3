#include "hgc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hgc/errors.hpp"
#include "hgc/generators.hpp"

namespace hgc {

std::string fmt_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

struct TrialAccumulator {
    long long p1 = 0, p2 = 0, bad = 0, verify_failures = 0;
    long long container_size_sum = 0, container_edges_sum = 0;
    int max_level_iterations = 0;
    std::vector<BadRecord> bad_exemplars;

    void merge(const TrialAccumulator& o) {
        p1 += o.p1;
        p2 += o.p2;
        bad += o.bad;
        verify_failures += o.verify_failures;
        container_size_sum += o.container_size_sum;
        container_edges_sum += o.container_edges_sum;
        max_level_iterations = std::max(max_level_iterations, o.max_level_iterations);
        bad_exemplars.insert(bad_exemplars.end(), o.bad_exemplars.begin(),
                             o.bad_exemplars.end());
    }
};

void classify_into(const Hypergraph& h, const VertexSet& i_set,
                   const ConstantSchedule& schedule, const std::vector<UnionSet>& families,
                   uint64_t seed, long long trial_id, TrialAccumulator& acc) {
    Rng rng = Rng::stream(seed, "extract", i_set.hash());
    ExtractionOutcome outcome = extract_fingerprint(h, i_set, schedule, rng, families);
    switch (outcome.tag) {
        case OutcomeTag::P1:
            acc.p1++;
            break;
        case OutcomeTag::P2: {
            acc.p2++;
            acc.container_size_sum += outcome.trace.container().size();
            acc.container_edges_sum += outcome.trace.container_edges;
            for (const auto& level : outcome.levels)
                acc.max_level_iterations =
                    std::max(acc.max_level_iterations, level.iterations);
            VerifyReport report = verify_container(h, i_set, outcome, schedule);
            if (!report.all_passed()) acc.verify_failures++;
            break;
        }
        case OutcomeTag::Bad: {
            acc.bad++;
            BadRecord record;
            record.trial = trial_id;
            record.subset_ids = i_set.ids();
            record.reason = outcome.reason;
            record.detail = outcome.detail;
            acc.bad_exemplars.push_back(std::move(record));
            break;
        }
    }
}

int iteration_cap(const ConstantSchedule& schedule) {
    int cap = 0;
    for (int kp = 1; kp < schedule.k; ++kp)
        cap = std::max(cap,
                       static_cast<int>(std::ceil(1.0 / schedule.alpha[kp])) + 8);
    return cap;
}

// Runs fn(t, acc) for t in [0, total) over `threads` workers; accumulators
// merge in worker order so the result is independent of scheduling.
template <typename Fn>
TrialAccumulator run_partitioned(long long total, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        TrialAccumulator acc;
        for (long long t = 0; t < total; ++t) fn(t, acc);
        return acc;
    }
    std::vector<TrialAccumulator> accs(threads);
    std::vector<std::thread> workers;
    long long chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        long long begin = w * chunk;
        long long end = std::min(total, begin + chunk);
        workers.emplace_back([&, w, begin, end]() {
            for (long long t = begin; t < end; ++t) fn(t, accs[w]);
        });
    }
    for (auto& worker : workers) worker.join();
    TrialAccumulator merged;
    for (auto& acc : accs) merged.merge(acc);
    return merged;
}

}  // namespace

TrichotomySummary mc_trichotomy(const Hypergraph& h, int m, const ConstantSchedule& schedule,
                                long long trials, uint64_t seed, int threads) {
    if (trials < 1) throw Error(ErrorKind::InvalidParameter, "trials must be >= 1");
    if (m < 1 || m > h.vertex_count())
        throw Error(ErrorKind::InvalidParameter, "m outside [1, N]");
    const std::vector<UnionSet> families = union_families(h);

    TrialAccumulator acc =
        run_partitioned(trials, threads, [&](long long t, TrialAccumulator& local) {
            Rng sample_rng = Rng::stream(seed, "trial-sample", static_cast<uint64_t>(t));
            VertexSet i_set = sample_uniform_mset(h.vertex_count(), m, sample_rng);
            classify_into(h, i_set, schedule, families, seed, t, local);
        });

    TrichotomySummary summary;
    summary.m = m;
    summary.trials = trials;
    summary.seed = seed;
    summary.p1 = acc.p1;
    summary.p2 = acc.p2;
    summary.bad = acc.bad;
    summary.verify_failures = acc.verify_failures;
    summary.container_size_sum = acc.container_size_sum;
    summary.container_edges_sum = acc.container_edges_sum;
    summary.max_level_iterations = acc.max_level_iterations;
    summary.iteration_cap = iteration_cap(schedule);
    summary.bad_exemplars = std::move(acc.bad_exemplars);
    std::sort(summary.bad_exemplars.begin(), summary.bad_exemplars.end(),
              [](const BadRecord& a, const BadRecord& b) { return a.trial < b.trial; });
    return summary;
}

TrichotomySummary brute_force_scan(const Hypergraph& h, int m,
                                   const ConstantSchedule& schedule, uint64_t seed,
                                   int threads) {
    const int n = h.vertex_count();
    if (m < 1 || m > n) throw Error(ErrorKind::InvalidParameter, "m outside [1, N]");
    const long long total = binomial_capped(n, m, 2000000);
    if (total > 1000000)
        throw Error(ErrorKind::InstanceTooLarge, "brute_force_scan requires C(N, m) <= 10^6");

    // Materialize subsets in lexicographic order; subset rank is the trial id.
    std::vector<std::vector<int>> subsets;
    subsets.reserve(static_cast<size_t>(total));
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i;
    for (;;) {
        subsets.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == n - m + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }

    const std::vector<UnionSet> families = union_families(h);
    TrialAccumulator acc = run_partitioned(
        static_cast<long long>(subsets.size()), threads,
        [&](long long t, TrialAccumulator& local) {
            VertexSet i_set = VertexSet::from_ids(n, subsets[static_cast<size_t>(t)]);
            classify_into(h, i_set, schedule, families, seed, t, local);
        });

    TrichotomySummary summary;
    summary.m = m;
    summary.trials = static_cast<long long>(subsets.size());
    summary.seed = seed;
    summary.p1 = acc.p1;
    summary.p2 = acc.p2;
    summary.bad = acc.bad;
    summary.verify_failures = acc.verify_failures;
    summary.container_size_sum = acc.container_size_sum;
    summary.container_edges_sum = acc.container_edges_sum;
    summary.max_level_iterations = acc.max_level_iterations;
    summary.iteration_cap = iteration_cap(schedule);
    summary.bad_exemplars = std::move(acc.bad_exemplars);
    std::sort(summary.bad_exemplars.begin(), summary.bad_exemplars.end(),
              [](const BadRecord& a, const BadRecord& b) { return a.trial < b.trial; });
    return summary;
}

IndependenceEstimate mc_independence(const Hypergraph& h, int m, long long trials,
                                     uint64_t seed, int threads) {
    if (trials < 100)
        throw Error(ErrorKind::InvalidParameter, "mc_independence needs trials >= 100");
    if (m < 0 || m > h.vertex_count())
        throw Error(ErrorKind::InvalidParameter, "m outside [0, N]");

    TrialAccumulator acc =
        run_partitioned(trials, threads, [&](long long t, TrialAccumulator& local) {
            Rng rng = Rng::stream(seed, "indep-trial", static_cast<uint64_t>(t));
            VertexSet i_set = sample_uniform_mset(h.vertex_count(), m, rng);
            local.p1 += h.is_independent(i_set);  // reuse a counter as hit count
        });

    IndependenceEstimate est;
    est.trials = trials;
    est.hits = acc.p1;
    est.estimate = static_cast<double>(est.hits) / trials;
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = est.estimate;
    const double denom = 1.0 + z * z / n;
    const double center = (phat + z * z / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    est.lo = std::max(0.0, center - half);
    est.hi = std::min(1.0, center + half);
    return est;
}

SweepResult sweep_report(const Hypergraph& h, const ConstantSchedule& schedule,
                         const SweepConfig& config) {
    namespace fs = std::filesystem;
    fs::create_directories(config.out_dir);
    SweepResult result;
    result.csv_path = (fs::path(config.out_dir) / "sweep.csv").string();
    result.manifest_path = (fs::path(config.out_dir) / "manifest.json").string();

    std::ostringstream csv;
    csv << "m,mu,delta,bound,p1,p2,bad,indep_est,indep_lo,indep_hi\n";
    for (int m : config.m_values) {
        JansonProfile profile = janson_bound(h, m);
        TrichotomySummary tri = mc_trichotomy(h, m, schedule, config.trichotomy_trials,
                                              config.seed, config.threads);
        IndependenceEstimate ind = mc_independence(h, m, config.independence_trials,
                                                   config.seed, config.threads);
        result.verify_failures += tri.verify_failures;

        // Janson is an upper bound once m reaches the uniformity (below it
        // the sampled set cannot contain an edge at all); flag estimates
        // exceeding the bound by > 3 SE.
        double se = std::sqrt(std::max(ind.estimate * (1.0 - ind.estimate),
                                       1.0 / ind.trials) /
                              ind.trials);
        if (m >= h.uniformity() && ind.estimate > profile.bound + 3.0 * se)
            result.janson_bound_respected = false;

        csv << m << ',' << fmt_g(profile.mu) << ',' << fmt_g(profile.delta) << ','
            << fmt_g(profile.bound) << ',' << fmt_g(tri.p1_fraction()) << ','
            << fmt_g(tri.p2_fraction()) << ',' << fmt_g(tri.bad_fraction()) << ','
            << fmt_g(ind.estimate) << ',' << fmt_g(ind.lo) << ',' << fmt_g(ind.hi) << '\n';
    }

    nlohmann::ordered_json manifest;
    manifest["format"] = "sweep-v1";
    manifest["tool_version"] = "hypercontainers 0.1.0";
    manifest["seed"] = config.seed;
    manifest["hypergraph_hash"] = h.content_hash();
    manifest["k"] = h.uniformity();
    manifest["vertices"] = h.vertex_count();
    manifest["edges"] = h.edge_count();
    manifest["m_values"] = config.m_values;
    manifest["trichotomy_trials"] = config.trichotomy_trials;
    manifest["independence_trials"] = config.independence_trials;
    manifest["columns"] = "m,mu,delta,bound,p1,p2,bad,indep_est,indep_lo,indep_hi";
    manifest["schedule"] = serialize_schedule(schedule);

    std::ofstream csv_out(result.csv_path, std::ios::binary);
    if (!csv_out) throw Error(ErrorKind::IOError, "cannot write " + result.csv_path);
    csv_out << csv.str();
    std::ofstream manifest_out(result.manifest_path, std::ios::binary);
    if (!manifest_out) throw Error(ErrorKind::IOError, "cannot write " + result.manifest_path);
    manifest_out << manifest.dump(2) << '\n';
    return result;
}

}  // namespace hgc
