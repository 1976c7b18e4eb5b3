#include "hgc/containers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

const char* to_string(OutcomeTag tag) {
    switch (tag) {
        case OutcomeTag::P1: return "P1";
        case OutcomeTag::P2: return "P2";
        case OutcomeTag::Bad: return "BAD";
    }
    return "?";
}

const char* to_string(BadReason reason) {
    switch (reason) {
        case BadReason::None: return "none";
        case BadReason::SaturationExhausted: return "saturation-search exhausted";
        case BadReason::DeletionBudgetExceeded: return "deletion budget exceeded";
        case BadReason::FingerprintOverflow: return "fingerprint overflow";
        case BadReason::IterationGuardExceeded: return "iteration guard exceeded";
    }
    return "?";
}

std::string serialize_fingerprint(const Fingerprint& fp) {
    std::ostringstream os;
    char eps[64];
    std::snprintf(eps, sizeof eps, "%.17g", fp.epsilon);
    os << fp.m << ' ' << eps << ' ' << fp.tuple.size() + 1 << '\n';
    auto write_set = [&os](const VertexSet& s) {
        auto ids = s.ids();
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i) os << ' ';
            os << ids[i];
        }
        os << '\n';
    };
    write_set(fp.f);
    for (const auto& fi : fp.tuple) write_set(fi);
    return os.str();
}

Fingerprint parse_fingerprint(const std::string& text, int universe) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorKind::IOError, "fingerprint: empty record");
    std::istringstream header(line);
    Fingerprint fp;
    int k = 0;
    if (!(header >> fp.m >> fp.epsilon >> k) || k < 2)
        throw Error(ErrorKind::IOError, "fingerprint: malformed header");
    auto read_set = [&]() {
        if (!std::getline(is, line))
            throw Error(ErrorKind::IOError, "fingerprint: truncated record");
        VertexSet s(universe);
        std::istringstream ls(line);
        int v;
        while (ls >> v) s.insert(v);
        return s;
    };
    fp.f = read_set();
    fp.tuple.reserve(k - 1);
    for (int i = 1; i < k; ++i) fp.tuple.push_back(read_set());
    return fp;
}

namespace {

/// One cascade level: keep v in d_upper when its deg_{k'} against (d_upper, f)
/// is zero or strictly below t_over_n.
VertexSet cascade_level(const Hypergraph& h, const VertexSet& d_upper, const VertexSet& f,
                        int kprime, double t_over_n) {
    VertexSet out(h.vertex_count());
    d_upper.for_each([&](int v) {
        long long deg = h.deg_at_least(v, kprime, d_upper, f);
        if (deg == 0 || static_cast<double>(deg) < t_over_n) out.insert(v);
    });
    return out;
}

}  // namespace

ContainerTrace compute_container(const Hypergraph& h, const Fingerprint& fp,
                                 const ConstantSchedule& schedule) {
    const int k = h.uniformity();
    const int n = h.vertex_count();
    if (static_cast<int>(fp.tuple.size()) != k - 1)
        throw Error(ErrorKind::InvalidParameter, "fingerprint tuple must have k-1 entries");
    if (fp.m < 1 || fp.m > n)
        throw Error(ErrorKind::InvalidParameter, "fingerprint m outside [1, N]");
    if (schedule.k != k)
        throw Error(ErrorKind::InvalidParameter, "schedule uniformity mismatch");

    ContainerTrace trace;
    trace.levels.assign(k + 1, VertexSet(n));
    trace.thresholds.assign(k, 0.0);
    trace.tuple_counts.assign(k, 0);
    trace.levels[k] = h.full_vertex_set();
    for (int kp = k - 1; kp >= 1; --kp) {
        trace.thresholds[kp] = schedule.threshold(kp, h, fp.m);
        trace.levels[kp] = cascade_level(h, trace.levels[kp + 1], fp.tuple[kp - 1], kp,
                                         trace.thresholds[kp] / n);
        trace.tuple_counts[kp] = h.e_at_least(kp, trace.levels[kp], fp.tuple[kp - 1]);
    }
    trace.thresholds[0] = schedule.threshold(0, h, fp.m);
    trace.levels[0] =
        cascade_level(h, trace.levels[1], VertexSet(n), 0, trace.thresholds[0] / n);
    trace.container_edges = h.induced_edge_count(trace.levels[0]);
    return trace;
}

SaturationCheck is_saturating(const Hypergraph& h, const VertexSet& w, const VertexSet& d,
                              int kprime, double alpha, double t) {
    if (alpha <= 0.0) throw Error(ErrorKind::InvalidParameter, "alpha must be positive");
    if (t < 0.0) throw Error(ErrorKind::InvalidParameter, "t must be non-negative");
    const double t_over_n = t / h.vertex_count();
    SaturationCheck check;
    d.for_each([&](int v) {
        if (static_cast<double>(h.deg_at_least(v, kprime, d, w)) >= t_over_n)
            check.witness_count++;
    });
    check.saturating =
        static_cast<double>(check.witness_count) >= alpha * h.vertex_count();
    return check;
}

std::optional<VertexSet> find_saturating_set(const Hypergraph& h, const VertexSet& iprime,
                                             const VertexSet& d, int kprime, int m,
                                             const ConstantSchedule& schedule, Rng& rng) {
    const double guard = schedule.density_guard(kprime, h, m);
    if (static_cast<double>(h.e_at_least(kprime, d, iprime)) < guard)
        throw Error(ErrorKind::PreconditionViolated,
                    "find_saturating_set: e_{k'}(D, I') below the density guard");

    const double xi = schedule.xi[kprime];
    const double t = schedule.threshold(kprime, h, m);
    const double alpha = schedule.alpha[kprime];
    const int max_size = static_cast<int>(std::ceil(xi * m));
    for (int attempt = 0; attempt < schedule.saturation_max_retries; ++attempt) {
        VertexSet w(h.vertex_count());
        iprime.for_each([&](int v) {
            if (rng.bernoulli(xi / 2.0)) w.insert(v);
        });
        if (w.size() > max_size) continue;
        if (is_saturating(h, w, d, kprime, alpha, t).saturating) return w;
    }
    return std::nullopt;
}

namespace {

// True when every (s, s') cell meets its threshold against `live`.
bool deletion_thresholds_met(const std::vector<UnionSet>& family,
                             const std::map<int, long long>& family_size,
                             const VertexSet& live, double t_del, double q) {
    std::map<int, std::vector<long long>> counts;
    for (const auto& [s, total] : family_size) counts[s].assign(s + 1, 0);
    for (const auto& u : family) {
        int c = 0;
        u.members.for_each([&](int v) { c += live.contains(v); });
        for (int sp = 1; sp <= c; ++sp) counts[u.s][sp]++;
    }
    for (const auto& [s, per_sp] : counts)
        for (int sp = 1; sp <= s; ++sp)
            if (static_cast<double>(per_sp[sp]) >
                t_del * family_size.at(s) * std::pow(q, sp))
                return false;
    return true;
}

}  // namespace

DeletionResult deletion_prune(const std::vector<UnionSet>& family, const VertexSet& i_set,
                              int m, double t_del, double beta) {
    const int n = i_set.universe();
    const double q = n > 0 ? static_cast<double>(m) / n : 0.0;
    const double budget = beta * m;

    // Member count per size s.
    std::map<int, long long> family_size;
    for (const auto& u : family) family_size[u.s]++;

    DeletionResult result;
    result.removed = VertexSet(n);

    std::vector<int> inter(family.size(), 0);
    auto recount = [&](const VertexSet& live) {
        for (size_t i = 0; i < family.size(); ++i) {
            int c = 0;
            family[i].members.for_each([&](int v) { c += live.contains(v); });
            inter[i] = c;
        }
    };

    // On greedy failure, small instances are searched exhaustively so that a
    // reported failure certifies no admissible X exists (lexicographically
    // first feasible X wins when greedy alone would have given up).
    auto exhaustive_rescue = [&](DeletionResult failed) -> DeletionResult {
        const int int_budget = static_cast<int>(std::floor(budget));
        auto ids = i_set.ids();
        const int isize = static_cast<int>(ids.size());
        if (isize > 20 || int_budget < 0) return failed;
        long long space = 0;
        for (int d = 0; d <= int_budget && space <= 200000; ++d) {
            long long c = 1;
            for (int i = 1; i <= d; ++i) c = c * (isize - i + 1) / i;
            space += c;
        }
        if (space > 200000) return failed;
        std::vector<int> pick;
        // DFS over subsets of size <= int_budget in lexicographic order.
        std::function<std::optional<VertexSet>(int)> dfs =
            [&](int start) -> std::optional<VertexSet> {
            VertexSet candidate = i_set;
            for (int v : pick) candidate.erase(v);
            if (deletion_thresholds_met(family, family_size, candidate, t_del, q)) {
                VertexSet x(n);
                for (int v : pick) x.insert(v);
                return x;
            }
            if (static_cast<int>(pick.size()) == int_budget) return std::nullopt;
            for (int i = start; i < isize; ++i) {
                pick.push_back(ids[i]);
                auto found = dfs(i + 1);
                pick.pop_back();
                if (found) return found;
            }
            return std::nullopt;
        };
        auto found = dfs(0);
        if (found) {
            DeletionResult ok;
            ok.ok = true;
            ok.removed = *found;
            return ok;
        }
        failed.exhausted = true;
        return failed;
    };

    VertexSet live = i_set;
    recount(live);

    for (;;) {
        // counts[s][s'] = members of size s meeting live in >= s' elements
        std::map<int, std::vector<long long>> counts;
        for (auto& [s, cnt] : family_size) counts[s].assign(s + 1, 0);
        for (size_t i = 0; i < family.size(); ++i)
            for (int sp = 1; sp <= inter[i]; ++sp) counts[family[i].s][sp]++;

        int bad_s = -1, bad_sp = -1;
        long long bad_count = 0;
        double bad_threshold = 0.0;
        for (auto& [s, per_sp] : counts) {
            for (int sp = 1; sp <= s; ++sp) {
                double threshold = t_del * family_size[s] * std::pow(q, sp);
                if (static_cast<double>(per_sp[sp]) > threshold) {
                    bad_s = s;
                    bad_sp = sp;
                    bad_count = per_sp[sp];
                    bad_threshold = threshold;
                    break;
                }
            }
            if (bad_s >= 0) break;
        }
        if (bad_s < 0) {
            result.ok = true;
            return result;
        }
        if (static_cast<double>(result.removed.size() + 1) > budget) {
            result.ok = false;
            result.s = bad_s;
            result.sprime = bad_sp;
            result.count = bad_count;
            result.threshold = bad_threshold;
            return exhaustive_rescue(result);
        }

        // A member is violating when it feeds any violated (s, s') cell.
        std::vector<char> violating(family.size(), 0);
        for (size_t i = 0; i < family.size(); ++i) {
            int s = family[i].s;
            for (int sp = 1; sp <= inter[i]; ++sp) {
                double threshold = t_del * family_size[s] * std::pow(q, sp);
                if (static_cast<double>(counts[s][sp]) > threshold) {
                    violating[i] = 1;
                    break;
                }
            }
        }
        std::vector<long long> cover(n, 0);
        for (size_t i = 0; i < family.size(); ++i) {
            if (!violating[i]) continue;
            family[i].members.for_each([&](int v) {
                if (live.contains(v)) cover[v]++;
            });
        }
        int best = -1;
        long long best_cover = -1;
        live.for_each([&](int v) {
            if (cover[v] > best_cover) {
                best_cover = cover[v];
                best = v;
            }
        });
        live.erase(best);
        result.removed.insert(best);
        for (size_t i = 0; i < family.size(); ++i)
            if (family[i].members.contains(best)) inter[i]--;
    }
}

namespace {

ExtractionOutcome bad_outcome(BadReason reason, std::string detail) {
    ExtractionOutcome out;
    out.tag = OutcomeTag::Bad;
    out.reason = reason;
    out.detail = std::move(detail);
    return out;
}

}  // namespace

ExtractionOutcome extract_fingerprint(const Hypergraph& h, const VertexSet& i_set,
                                      const ConstantSchedule& schedule, Rng& rng) {
    return extract_fingerprint(h, i_set, schedule, rng, union_families(h));
}

ExtractionOutcome extract_fingerprint(const Hypergraph& h, const VertexSet& i_set,
                                      const ConstantSchedule& schedule, Rng& rng,
                                      const std::vector<UnionSet>& families) {
    const int k = h.uniformity();
    const int n = h.vertex_count();
    const int m = i_set.size();
    if (m < 1) throw Error(ErrorKind::InvalidParameter, "extraction needs |I| >= 1");
    if (schedule.k != k)
        throw Error(ErrorKind::InvalidParameter, "schedule uniformity mismatch");

    // (P1) dense sample. Zero thresholds (edgeless H) never classify as dense.
    const long long induced = h.induced_edge_count(i_set);
    const double p1_threshold = schedule.density_guard(k, h, m);
    if (induced > 0 && static_cast<double>(induced) >= p1_threshold) {
        ExtractionOutcome out;
        out.tag = OutcomeTag::P1;
        out.induced_edges = induced;
        out.p1_threshold = p1_threshold;
        return out;
    }

    // Deletion step: one prune per level, all against the original I.
    VertexSet pruned(n);
    for (int kp = 1; kp <= k - 1; ++kp) {
        DeletionResult res = deletion_prune(families, i_set, m, schedule.t_del, schedule.beta);
        if (!res.ok) {
            std::ostringstream os;
            os << "level " << kp << ": family s=" << res.s << " s'=" << res.sprime
               << " count=" << res.count << " threshold=" << res.threshold;
            return bad_outcome(BadReason::DeletionBudgetExceeded, os.str());
        }
        pruned |= res.removed;
    }
    VertexSet iprime = i_set - pruned;

    // Saturation loops, top level downwards.
    std::vector<VertexSet> tuple(k - 1, VertexSet(n));
    std::vector<VertexSet> level_sets(k + 1, VertexSet(n));
    level_sets[k] = h.full_vertex_set();
    std::vector<LevelStats> stats;
    for (int kp = k - 1; kp >= 1; --kp) {
        const double t_over_n = schedule.threshold(kp, h, m) / n;
        const double guard = schedule.density_guard(kp, h, m);
        const int max_iters =
            static_cast<int>(std::ceil(1.0 / schedule.alpha[kp])) + 8;
        LevelStats level;
        level.kprime = kp;
        level.guard = guard;
        level_sets[kp] = cascade_level(h, level_sets[kp + 1], tuple[kp - 1], kp, t_over_n);
        for (;;) {
            long long count = h.e_at_least(kp, level_sets[kp], iprime);
            if (count == 0 || static_cast<double>(count) < guard) {
                level.exit_count = count;
                break;
            }
            if (level.iterations + 1 > max_iters)
                return bad_outcome(BadReason::IterationGuardExceeded,
                                   "level " + std::to_string(kp));
            auto w = find_saturating_set(h, iprime, level_sets[kp], kp, m, schedule, rng);
            if (!w)
                return bad_outcome(BadReason::SaturationExhausted,
                                   "level " + std::to_string(kp));
            level.iterations++;
            tuple[kp - 1] |= *w;
            VertexSet next = cascade_level(h, level_sets[kp + 1], tuple[kp - 1], kp, t_over_n);
            int shrink = level_sets[kp].size() - next.size();
            if (static_cast<double>(shrink) < schedule.alpha[kp] * n)
                throw std::logic_error(
                    "saturation step shrank D_{k'} by less than alpha N");
            if (level.min_shrink < 0 || shrink < level.min_shrink)
                level.min_shrink = shrink;
            level_sets[kp] = std::move(next);
        }
        stats.push_back(level);
    }

    // Assemble the fingerprint: X, the residue R = I' \ D_0, and the tuple.
    const double t0_over_n = schedule.threshold(0, h, m) / n;
    VertexSet d0 = cascade_level(h, level_sets[1], VertexSet(n), 0, t0_over_n);
    VertexSet residue = iprime - d0;

    VertexSet f = pruned | residue;
    for (const auto& fi : tuple) f |= fi;
    const int target = static_cast<int>(std::ceil(schedule.epsilon * m));
    if (f.size() > target) {
        std::ostringstream os;
        os << "|F|=" << f.size() << " exceeds ceil(eps m)=" << target;
        return bad_outcome(BadReason::FingerprintOverflow, os.str());
    }
    VertexSet padding_pool = i_set - f;
    auto pool_ids = padding_pool.ids();
    for (size_t i = 0; f.size() < target && i < pool_ids.size(); ++i) f.insert(pool_ids[i]);

    ExtractionOutcome out;
    out.tag = OutcomeTag::P2;
    out.induced_edges = induced;
    out.p1_threshold = p1_threshold;
    out.fingerprint = Fingerprint{m, schedule.epsilon, std::move(f), std::move(tuple)};
    out.trace = compute_container(h, out.fingerprint, schedule);
    out.residue = std::move(residue);
    out.pruned = std::move(pruned);
    out.levels = std::move(stats);
    return out;
}

VerifyReport verify_container(const Hypergraph& h, const VertexSet& i_set,
                              const ExtractionOutcome& outcome,
                              const ConstantSchedule& schedule) {
    if (outcome.tag != OutcomeTag::P2)
        throw Error(ErrorKind::InvalidParameter, "verify_container needs a P2 outcome");

    // Round-trip through the wire format so the check starts from exactly
    // what a consumer would see.
    Fingerprint fp =
        parse_fingerprint(serialize_fingerprint(outcome.fingerprint), h.vertex_count());
    ContainerTrace trace = compute_container(h, fp, schedule);

    VerifyReport report;
    report.container_edges = trace.container_edges;
    report.sparsity_limit = schedule.epsilon * h.edge_count();
    report.container_hash = trace.container().hash();
    report.containment = i_set.is_subset_of(fp.f | trace.container());
    report.container_sparse =
        static_cast<double>(trace.container_edges) <= report.sparsity_limit;
    report.fingerprint_size =
        fp.f.size() == static_cast<int>(std::ceil(schedule.epsilon * fp.m));
    report.tuple_subsets = true;
    for (const auto& fi : fp.tuple)
        if (!fi.is_subset_of(fp.f)) report.tuple_subsets = false;
    return report;
}

}  // namespace hgc
