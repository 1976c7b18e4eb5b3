// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its instances, tolerances and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "hgc/containers.hpp"
#include "hgc/experiments.hpp"
#include "hgc/generators.hpp"
#include "hgc/janson.hpp"
#include "hgc/removal.hpp"

using namespace hgc;
namespace fs = std::filesystem;

namespace {

int failures = 0;
std::vector<std::string> notes;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, const std::string& name, bool pass, double elapsed,
            double limit) {
    bool in_time = elapsed < limit;
    bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %-58s (%.2fs / limit %.0fs)\n", ok ? "PASS" : "FAIL",
                criterion, name.c_str(), elapsed, limit);
    if (!pass) notes.push_back("criterion " + std::to_string(criterion) + " check failed");
    if (!in_time) notes.push_back("criterion " + std::to_string(criterion) + " over time");
}

bool rel_close(double a, double b, double tol = 1e-12) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= tol * scale;
}

// Independent pair enumeration oracle (no census machinery).
struct PairOracle {
    std::map<int, long long> ordered_by_union;
    double delta_at(const Hypergraph& h, int m) const {
        double q = static_cast<double>(m) / h.vertex_count();
        double total = 0;
        for (const auto& [s, count] : ordered_by_union) total += count * std::pow(q, s);
        return total;
    }
};

PairOracle pair_oracle(const Hypergraph& h) {
    PairOracle oracle;
    for (int e = 0; e < h.edge_count(); ++e)
        for (int f = 0; f < h.edge_count(); ++f) {
            if (e == f) continue;
            VertexSet u(h.vertex_count());
            for (int v : h.edge(e)) u.insert(v);
            bool intersect = false;
            for (int v : h.edge(f)) intersect = intersect || u.contains(v);
            if (!intersect) continue;
            for (int v : h.edge(f)) u.insert(v);
            oracle.ordered_by_union[u.size()]++;
        }
    return oracle;
}

ConstantSchedule empirical(double eps, int k = 3) {
    return derive_schedule(k, eps, 10.0, ScheduleMode::Empirical);
}

// ---- criterion 1: janson oracle equivalence -----------------------------

void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    struct Case {
        Hypergraph h;
        const char* name;
    };
    std::vector<Case> cases;
    cases.push_back({triangle_hypergraph(4), "T4"});
    cases.push_back({triangle_hypergraph(5), "T5"});
    cases.push_back({ap_hypergraph(5), "A5"});
    cases.push_back({ap_hypergraph(9), "A9"});

    for (const auto& c : cases) {
        PairOracle oracle = pair_oracle(c.h);
        PairCensus census = pair_census(c.h);
        const int k = c.h.uniformity();
        for (int s = k + 1; s <= 2 * k - 1; ++s) {
            long long want = oracle.ordered_by_union.count(s)
                                 ? oracle.ordered_by_union.at(s)
                                 : 0;
            ok = ok && census.ordered_pairs[s] == want;
        }
        for (int m = 1; m <= c.h.vertex_count(); ++m) {
            ok = ok && rel_close(delta(c.h, m), oracle.delta_at(c.h, m));
            double q = static_cast<double>(m) / c.h.vertex_count();
            ok = ok && rel_close(mu(c.h, m), c.h.edge_count() * std::pow(q, k));
        }
    }

    // Frozen worked values: T4 at m = 3 has 12 ordered pairs of union 5.
    PairCensus t4 = pair_census(triangle_hypergraph(4));
    ok = ok && t4.ordered_pairs[5] == 12;
    ok = ok && rel_close(mu(triangle_hypergraph(4), 3), 0.5);
    ok = ok && rel_close(delta(triangle_hypergraph(4), 3), 0.375);

    report(1, "janson mu/delta match pair-enumeration oracle (1e-12)", ok,
           seconds_since(start), 1.0);
}

// ---- criterion 2: theta band ---------------------------------------------

void criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 8; n <= 20; ++n) {
        for (const Hypergraph& h : {triangle_hypergraph(n), ap_hypergraph(n)}) {
            const int big_n = h.vertex_count();
            int lo = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(big_n))));
            int hi = big_n / 2;
            PairCensus census = pair_census(h);
            double min_ratio = 1e300, max_ratio = 0;
            for (int m = lo; m <= hi; ++m) {
                double q = static_cast<double>(m) / big_n;
                double mu_v = h.edge_count() * std::pow(q, h.uniformity());
                double delta_v = 0;
                for (int s = h.uniformity() + 1; s <= 2 * h.uniformity() - 1; ++s)
                    delta_v += census.ordered_pairs[s] * std::pow(q, s);
                double ratio = delta_v * m / (mu_v * mu_v);
                min_ratio = std::min(min_ratio, ratio);
                max_ratio = std::max(max_ratio, ratio);
            }
            ok = ok && max_ratio <= 10.0 * min_ratio;
        }
    }
    report(2, "ratio Delta(m) m / mu(m)^2 in a width-10 band, n in [8,20]", ok,
           seconds_since(start), 10.0);
}

// ---- criterion 3: container soundness ------------------------------------

void criterion_3() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    TrichotomySummary a15 =
        mc_trichotomy(ap_hypergraph(15), 6, empirical(0.9), 10000, 20250801, 2);
    TrichotomySummary t6 =
        mc_trichotomy(triangle_hypergraph(6), 6, empirical(0.9), 10000, 20250802, 2);

    ok = ok && a15.verify_failures == 0 && t6.verify_failures == 0;
    ok = ok && a15.p2 > 0 && t6.p2 > 0;  // the check must not be vacuous
    std::printf("      A15: p1=%lld p2=%lld bad=%lld | T6: p1=%lld p2=%lld bad=%lld\n",
                a15.p1, a15.p2, a15.bad, t6.p1, t6.p2, t6.bad);

    report(3, "10^4 extractions each on A15/T6: 100% of P2 verify", ok,
           seconds_since(start), 120.0);
}

// ---- criterion 4: determinism --------------------------------------------

void criterion_4() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    Hypergraph a9 = ap_hypergraph(9);
    ConstantSchedule sched = empirical(0.75);

    // f_m determinism and serialization round trip.
    Rng rng(9001);
    for (int i = 0; i < 50; ++i) {
        int m = 2 + static_cast<int>(rng.below(7));
        VertexSet base = sample_uniform_mset(9, m, rng);
        Fingerprint fp;
        fp.m = m;
        fp.epsilon = sched.epsilon;
        fp.f = base;
        fp.tuple = {sample_binomial_set(9, 0.5, rng) & base,
                    sample_binomial_set(9, 0.5, rng) & base};
        ContainerTrace t1 = compute_container(a9, fp, sched);
        ContainerTrace t2 = compute_container(a9, fp, sched);
        Fingerprint round = parse_fingerprint(serialize_fingerprint(fp), 9);
        ContainerTrace t3 = compute_container(a9, round, sched);
        ok = ok && t1.container() == t2.container() && t1.container() == t3.container();
        ok = ok && serialize_fingerprint(round) == serialize_fingerprint(fp);
    }

    // Full pipeline: two sweep runs from one manifest configuration.
    SweepConfig config;
    config.m_values = {3, 4, 5};
    config.trichotomy_trials = 400;
    config.independence_trials = 400;
    config.seed = 77;
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    config.out_dir = (fs::temp_directory_path() / "hgc_acc_sweep_a").string();
    SweepResult r1 = sweep_report(a9, sched, config);
    config.out_dir = (fs::temp_directory_path() / "hgc_acc_sweep_b").string();
    SweepResult r2 = sweep_report(a9, sched, config);
    ok = ok && slurp(r1.csv_path) == slurp(r2.csv_path);
    ok = ok && slurp(r1.manifest_path) == slurp(r2.manifest_path);
    ok = ok && r1.verify_failures == 0;

    report(4, "f_m and pipelines byte-identical; fingerprints round-trip", ok,
           seconds_since(start), 60.0);
}

// ---- criterion 5: cascade structure ---------------------------------------

void criterion_5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    struct Instance {
        Hypergraph h;
        int m;
        double eps;
    };
    std::vector<Instance> instances;
    instances.push_back({ap_hypergraph(9), 4, 0.9});
    instances.push_back({ap_hypergraph(15), 6, 0.9});
    instances.push_back({triangle_hypergraph(6), 6, 0.9});

    for (const auto& inst : instances) {
        ConstantSchedule sched = empirical(inst.eps, inst.h.uniformity());
        auto families = union_families(inst.h);
        int p2_seen = 0;
        for (uint64_t t = 0; t < 2000; ++t) {
            Rng sample_rng = Rng::stream(555, "acc5-sample", t);
            VertexSet i_set =
                sample_uniform_mset(inst.h.vertex_count(), inst.m, sample_rng);
            Rng rng = Rng::stream(555, "extract", i_set.hash());
            // extract_fingerprint hard-asserts the per-step shrink >= alpha N.
            ExtractionOutcome out =
                extract_fingerprint(inst.h, i_set, sched, rng, families);
            if (out.tag != OutcomeTag::P2) continue;
            ++p2_seen;
            for (int level = 0; level < inst.h.uniformity(); ++level)
                ok = ok && out.trace.levels[level].is_subset_of(out.trace.levels[level + 1]);
            for (const auto& level : out.levels) {
                int cap =
                    static_cast<int>(std::ceil(1.0 / sched.alpha[level.kprime])) + 8;
                ok = ok && level.iterations <= cap;
                if (level.iterations > 0)
                    ok = ok && static_cast<double>(level.min_shrink) >=
                                   sched.alpha[level.kprime] * inst.h.vertex_count();
            }
        }
        ok = ok && p2_seen > 0;
    }
    report(5, "nesting, iteration cap, and per-step shrink on every extraction", ok,
           seconds_since(start), 60.0);
}

// ---- criterion 6: janson upper bound at A9, m = 4 -------------------------

void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    Hypergraph a9 = ap_hypergraph(9);

    long long independent = 0, total = 0;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c)
                for (int d = c + 1; d < 9; ++d) {
                    ++total;
                    independent += a9.is_independent(VertexSet(9, {a, b, c, d}));
                }
    double exact = static_cast<double>(independent) / total;

    IndependenceEstimate est = mc_independence(a9, 4, 1000000, 606, 2);
    JansonProfile profile = janson_bound(a9, 4);

    bool ok = total == 126;
    ok = ok && est.lo <= exact && exact <= est.hi;
    ok = ok && exact <= profile.bound;
    std::printf("      exact=%lld/126=%.6f mc=[%.6f, %.6f] bound=%.6f\n", independent,
                exact, est.lo, est.hi, profile.bound);
    report(6, "A9 m=4: exact independence within CI and below janson bound", ok,
           seconds_since(start), 1.0);
}

// ---- criterion 7: exceptional-set smallness --------------------------------

void criterion_7() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    ConstantSchedule sched = empirical(0.9);  // the CLI's default schedule

    auto audit = [&ok](const char* name, const TrichotomySummary& s) {
        double fraction = s.bad_fraction();
        ok = ok && fraction <= 0.05 && s.verify_failures == 0;
        std::printf("      %-18s subsets=%lld bad=%lld (%.2f%%)\n", name, s.trials, s.bad,
                    100.0 * fraction);
        for (size_t i = 0; i < s.bad_exemplars.size() && i < 4; ++i) {
            const auto& rec = s.bad_exemplars[i];
            std::printf("        bad exemplar: subset #%lld {", rec.trial);
            for (size_t j = 0; j < rec.subset_ids.size(); ++j)
                std::printf("%s%d", j ? "," : "", rec.subset_ids[j]);
            std::printf("} %s\n", to_string(rec.reason));
        }
    };

    Hypergraph a5 = ap_hypergraph(5);
    audit("A5 m=2", brute_force_scan(a5, 2, sched, 11, 2));
    audit("A5 m=3", brute_force_scan(a5, 3, sched, 11, 2));

    struct RandomCase {
        int n;
        long long edges;
        int m;
        uint64_t seed;
    };
    for (const RandomCase& rc : {RandomCase{11, 26, 5, 101}, RandomCase{11, 26, 5, 102},
                                 RandomCase{11, 26, 5, 103}, RandomCase{12, 28, 6, 104},
                                 RandomCase{12, 28, 6, 105}}) {
        Rng gen = Rng::stream(rc.seed, "gen-random");
        Hypergraph h = random_k_graph(3, rc.n, rc.edges, gen);
        char name[40];
        std::snprintf(name, sizeof name, "random N=%d M=%lld m=%d #%llu", rc.n, rc.edges,
                      rc.m, static_cast<unsigned long long>(rc.seed));
        audit(name, brute_force_scan(h, rc.m, sched, rc.seed, 2));
    }

    report(7, "brute scans: BAD fraction <= 5% with default empirical schedule", ok,
           seconds_since(start), 300.0);
}

// ---- criterion 8: deletion method ------------------------------------------

void criterion_8() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    Rng rng(20250808);
    int successes = 0, confirmed_failures = 0;

    for (int inst = 0; inst < 1000; ++inst) {
        int n = 8 + static_cast<int>(rng.below(7));
        Hypergraph h =
            random_k_graph(3, n, rng.below(binomial_capped(n, 3, 1 << 20) / 3 + 1), rng);
        auto families = union_families(h);
        int m = 2 + static_cast<int>(rng.below(12));
        m = std::min(m, n);
        VertexSet i_set = sample_uniform_mset(n, m, rng);
        double t_del = 0.25 + rng.next_double() * 6.0;
        double beta = rng.next_double() * 0.6;

        DeletionResult res = deletion_prune(families, i_set, m, t_del, beta);
        double q = static_cast<double>(m) / n;
        std::map<int, long long> sizes;
        for (const auto& u : families) sizes[u.s]++;
        auto count_cell = [&](const VertexSet& live, int s, int sp) {
            long long count = 0;
            for (const auto& u : families) {
                if (u.s != s) continue;
                int inter = 0;
                u.members.for_each([&](int v) { inter += live.contains(v); });
                count += inter >= sp;
            }
            return count;
        };

        if (res.ok) {
            ++successes;
            ok = ok && static_cast<double>(res.removed.size()) <= beta * m;
            ok = ok && res.removed.is_subset_of(i_set);
            VertexSet live = i_set - res.removed;
            for (const auto& [s, total] : sizes)
                for (int sp = 1; sp <= s; ++sp)
                    ok = ok && static_cast<double>(count_cell(live, s, sp)) <=
                                   t_del * total * std::pow(q, sp);
        } else {
            // Failure must be certified: exhaustive search over the budget
            // found no admissible X (checked again here, independently).
            ok = ok && res.exhausted;
            ++confirmed_failures;
            int budget = static_cast<int>(std::floor(beta * m));
            auto ids = i_set.ids();
            int isize = static_cast<int>(ids.size());
            bool any_feasible = false;
            for (uint32_t mask = 0; mask < (1u << isize) && !any_feasible; ++mask) {
                if (__builtin_popcount(mask) > budget) continue;
                VertexSet live = i_set;
                for (int b = 0; b < isize; ++b)
                    if (mask & (1u << b)) live.erase(ids[b]);
                bool feasible = true;
                for (const auto& [s, total] : sizes) {
                    for (int sp = 1; sp <= s && feasible; ++sp)
                        feasible = static_cast<double>(count_cell(live, s, sp)) <=
                                   t_del * total * std::pow(q, sp);
                    if (!feasible) break;
                }
                any_feasible = feasible;
            }
            ok = ok && !any_feasible;
        }
    }
    std::printf("      %d successes recounted, %d failures certified infeasible\n",
                successes, confirmed_failures);
    ok = ok && successes > 100 && confirmed_failures > 10;
    report(8, "deletion_prune recount on 1000 instances; failures certified", ok,
           seconds_since(start), 300.0);
}

// ---- criterion 9: removal ---------------------------------------------------

void criterion_9() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    Hypergraph triangle = Hypergraph::build(2, 3, {{0, 1}, {0, 2}, {1, 2}});
    Hypergraph k4 = Hypergraph::build(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ok = ok && m_k_density(triangle) == Rational{2, 1};
    ok = ok && m_k_density(k4) == Rational{5, 2};

    Rng rng(991);
    for (int inst = 0; inst < 200; ++inst) {
        int n = 6 + static_cast<int>(rng.below(11));
        int k = 2 + static_cast<int>(rng.below(2));
        Hypergraph h =
            random_k_graph(k, n, rng.below(binomial_capped(n, k, 1 << 20) / 2 + 1), rng);
        int isize = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        VertexSet i_set = sample_uniform_mset(n, isize, rng);
        int budget = static_cast<int>(rng.below(7));
        RemovabilityReport rep = min_removal_witness(h, i_set, budget);
        ok = ok && rep.exact;

        // Exhaustive minimum over all subsets of I within the budget.
        auto ids = i_set.ids();
        int sz = static_cast<int>(ids.size());
        int best = -1;
        for (uint32_t mask = 0; mask < (1u << sz); ++mask) {
            int size = __builtin_popcount(mask);
            if (size > budget || (best >= 0 && size >= best)) continue;
            VertexSet remaining = i_set;
            for (int b = 0; b < sz; ++b)
                if (mask & (1u << b)) remaining.erase(ids[b]);
            if (h.is_independent(remaining)) best = size;
        }
        if (best >= 0) {
            ok = ok && rep.witness.has_value();
            if (rep.witness) {
                ok = ok && rep.witness->size() == best;
                ok = ok && h.is_independent(i_set - *rep.witness);
            }
        } else {
            ok = ok && !rep.witness.has_value();
        }
    }
    report(9, "removal witness exact vs exhaustive (200 instances); m_k values", ok,
           seconds_since(start), 120.0);
}

// ---- criterion 10: transference ---------------------------------------------

void criterion_10() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    Hypergraph a9 = ap_hypergraph(9);
    const double gamma = 0.5, alpha = 1.0 / 3.0;

    for (double p : {0.5, 0.7, 0.9}) {
        TransferenceStats s1 = transference_experiment(a9, gamma, alpha, p, 50, 424242);
        TransferenceStats s2 = transference_experiment(a9, gamma, alpha, p, 50, 424242);
        ok = ok && s1.trials == 50 && s2.passes == s1.passes;
        ok = ok && !s1.any_sampled;  // subsets enumerated exactly at this scale
        for (int t = 0; t < 50; ++t) {
            ok = ok && s1.per_trial[t].pass == s2.per_trial[t].pass;
            ok = ok && s1.per_trial[t].w_size == s2.per_trial[t].w_size;
        }
        std::printf("      p=%.1f pass fraction %.3f (threshold e(I)<%.4f, budget %.2f)\n",
                    p, static_cast<double>(s1.passes) / s1.trials, s1.conclusion_s,
                    s1.conclusion_r);
    }
    report(10, "A9 transference: 50 seeded trials at p in {0.5,0.7,0.9}", ok,
           seconds_since(start), 300.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    for (const auto& note : notes) std::printf("note: %s\n", note.c_str());
    std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                failures);
    return failures == 0 ? 0 : 1;
}
