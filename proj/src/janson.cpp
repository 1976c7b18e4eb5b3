#include "hgc/janson.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

void require_vertices(const Hypergraph& h) {
    if (h.vertex_count() == 0)
        throw Error(ErrorKind::EmptyVertexSet, "janson quantities need N > 0");
}

int union_size(const Hypergraph& h, int e1, int e2) {
    auto a = h.edge(e1);
    auto b = h.edge(e2);
    int shared = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++shared;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<int>(a.size() + b.size()) - shared;
}

// Distinct edges intersecting edge e, gathered through incidence lists.
std::vector<int> intersecting_edges(const Hypergraph& h, int e) {
    std::vector<int> out;
    for (int32_t v : h.edge(e))
        for (int32_t f : h.incident_edges(v))
            if (f != e) out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

double mu(const Hypergraph& h, int m) {
    require_vertices(h);
    if (m < 0 || m > h.vertex_count())
        throw Error(ErrorKind::InvalidParameter, "m outside [0, N]");
    double q = static_cast<double>(m) / h.vertex_count();
    return h.edge_count() * std::pow(q, h.uniformity());
}

double delta(const Hypergraph& h, int m) {
    require_vertices(h);
    if (m < 0 || m > h.vertex_count())
        throw Error(ErrorKind::InvalidParameter, "m outside [0, N]");
    PairCensus census = pair_census(h);
    double q = static_cast<double>(m) / h.vertex_count();
    double total = 0.0;
    for (int s = h.uniformity() + 1; s <= 2 * h.uniformity() - 1; ++s)
        total += census.ordered_pairs[s] * std::pow(q, s);
    return total;
}

JansonProfile janson_bound(const Hypergraph& h, int m) {
    JansonProfile p;
    p.m = m;
    p.mu = mu(h, m);
    p.delta = delta(h, m);
    p.q = static_cast<double>(m) / h.vertex_count();
    p.delta_hat = p.mu + p.delta;
    p.bound = p.mu == 0.0 ? 1.0 : std::exp(-p.mu * p.mu / (2.0 * p.delta_hat));
    return p;
}

PairCensus pair_census(const Hypergraph& h) {
    const int k = h.uniformity();
    const int m = h.edge_count();
    PairCensus census;
    census.k = k;
    census.distinct_unions.assign(2 * k + 1, 0);
    census.ordered_pairs.assign(2 * k + 1, 0);

    census.distinct_unions[k] = m;  // e u e = e

    std::set<std::vector<int32_t>> seen[2];  // intersecting / disjoint unions
    for (int e = 0; e < m; ++e) {
        for (int f : intersecting_edges(h, e)) {
            int s = union_size(h, e, f);
            census.ordered_pairs[s]++;
            if (f > e) {
                std::vector<int32_t> u(h.edge(e).begin(), h.edge(e).end());
                u.insert(u.end(), h.edge(f).begin(), h.edge(f).end());
                std::sort(u.begin(), u.end());
                u.erase(std::unique(u.begin(), u.end()), u.end());
                if (seen[0].insert(std::move(u)).second) census.distinct_unions[s]++;
            }
        }
    }

    // Disjoint pairs contribute the size-2k unions.
    for (int e = 0; e < m; ++e) {
        VertexSet ve(h.vertex_count());
        for (int32_t v : h.edge(e)) ve.insert(v);
        for (int f = e + 1; f < m; ++f) {
            bool disjoint = true;
            for (int32_t v : h.edge(f))
                if (ve.contains(v)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            std::vector<int32_t> u(h.edge(e).begin(), h.edge(e).end());
            u.insert(u.end(), h.edge(f).begin(), h.edge(f).end());
            std::sort(u.begin(), u.end());
            if (seen[1].insert(std::move(u)).second) census.distinct_unions[2 * k]++;
        }
    }
    return census;
}

std::vector<UnionSet> union_families(const Hypergraph& h) {
    const int m = h.edge_count();
    std::set<std::vector<int32_t>> seen;
    for (int e = 0; e < m; ++e) {
        seen.insert({h.edge(e).begin(), h.edge(e).end()});
        for (int f = e + 1; f < m; ++f) {
            std::vector<int32_t> u(h.edge(e).begin(), h.edge(e).end());
            u.insert(u.end(), h.edge(f).begin(), h.edge(f).end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            seen.insert(std::move(u));
        }
    }
    std::vector<UnionSet> out;
    out.reserve(seen.size());
    for (const auto& u : seen) {
        UnionSet us;
        us.s = static_cast<int>(u.size());
        us.members = VertexSet(h.vertex_count());
        for (int32_t v : u) us.members.insert(v);
        out.push_back(std::move(us));
    }
    std::sort(out.begin(), out.end(), [](const UnionSet& a, const UnionSet& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.members.ids() < b.members.ids();
    });
    return out;
}

long long count_S_intersections(const Hypergraph& h, const VertexSet& q, int s, int sprime) {
    const int k = h.uniformity();
    if (s < k || s > 2 * k)
        throw Error(ErrorKind::InvalidParameter, "count_S_intersections: s outside [k, 2k]");
    long long count = 0;
    for (const UnionSet& u : union_families(h)) {
        if (u.s != s) continue;
        if (sprime <= 0) {
            ++count;
            continue;
        }
        int inter = 0;
        u.members.for_each([&](int v) { inter += q.contains(v); });
        count += inter >= sprime;
    }
    return count;
}

long long count_lambda(const Hypergraph& h, const VertexSet& w, int kprime, int s) {
    const int k = h.uniformity();
    if (s < k + 1 || s > 2 * k - 1)
        throw Error(ErrorKind::InvalidParameter, "count_lambda: s outside [k+1, 2k-1]");
    long long count = 0;
    for (int e = 0; e < h.edge_count(); ++e) {
        int e_in_w = 0;
        for (int32_t v : h.edge(e)) e_in_w += w.contains(v);
        if (e_in_w < kprime) continue;
        for (int f : intersecting_edges(h, e)) {
            if (union_size(h, e, f) != s) continue;
            int f_in_w = 0;
            for (int32_t v : h.edge(f)) f_in_w += w.contains(v);
            if (f_in_w < kprime) continue;
            bool shared_in_w = false;
            for (int32_t v : h.edge(e))
                if (w.contains(v)) {
                    for (int32_t u : h.edge(f))
                        if (u == v) {
                            shared_in_w = true;
                            break;
                        }
                    if (shared_in_w) break;
                }
            count += shared_in_w;
        }
    }
    return count;
}

VarianceDiagnostic variance_diagnostic(const Hypergraph& h, const VertexSet& w, int kprime,
                                       double t_factor, double q) {
    const int k = h.uniformity();
    if (kprime < 1 || kprime > k - 1)
        throw Error(ErrorKind::InvalidParameter, "variance_diagnostic: k' outside [1, k-1]");
    PairCensus census = pair_census(h);
    VarianceDiagnostic diag;
    diag.kprime = kprime;
    diag.t_factor = t_factor;
    diag.q = q;
    for (int s = k + 1; s <= 2 * k - 1; ++s) {
        VarianceRow row;
        row.s = s;
        row.lambda = count_lambda(h, w, kprime, s);
        row.ell = s + 2 * kprime - 2 * k;
        row.ell_prime = s + 2 * kprime + 1 - 2 * k;
        row.bound_term = t_factor * census.distinct_unions[s] * std::pow(q, row.ell);
        diag.lambda_total += row.lambda;
        diag.rows.push_back(row);
    }
    VertexSet all = h.full_vertex_set();
    for (int v = 0; v < h.vertex_count(); ++v) {
        long long d = h.deg_at_least(v, kprime, all, w);
        diag.sum_deg_sq += d * d;
    }
    return diag;
}

namespace {

// Delta(m) m / mu(m)^2 computed from one census evaluation.
double ratio_from_census(const PairCensus& census, long long edges, int k, int n, int m) {
    double q = static_cast<double>(m) / n;
    double mu_v = edges * std::pow(q, k);
    double delta_v = 0.0;
    for (int s = k + 1; s <= 2 * k - 1; ++s)
        delta_v += census.ordered_pairs[s] * std::pow(q, s);
    return delta_v * m / (mu_v * mu_v);
}

}  // namespace

bool m0_ratio_monotone(const Hypergraph& h) {
    require_vertices(h);
    if (h.edge_count() == 0) return true;
    PairCensus census = pair_census(h);
    double prev = ratio_from_census(census, h.edge_count(), h.uniformity(), h.vertex_count(), 1);
    for (int m = 2; m <= h.vertex_count(); ++m) {
        double cur =
            ratio_from_census(census, h.edge_count(), h.uniformity(), h.vertex_count(), m);
        if (cur > prev * (1.0 + 1e-9) + 1e-15) return false;
        prev = cur;
    }
    return true;
}

std::optional<int> find_m0_linear(const Hypergraph& h, double b) {
    if (b <= 0) throw Error(ErrorKind::InvalidParameter, "B must be positive");
    if (h.edge_count() == 0)
        throw Error(ErrorKind::InvalidParameter, "find_m0 needs e(H) > 0");
    require_vertices(h);
    PairCensus census = pair_census(h);
    for (int m = 1; m <= h.vertex_count(); ++m) {
        if (ratio_from_census(census, h.edge_count(), h.uniformity(), h.vertex_count(), m) <= b)
            return m;
    }
    return std::nullopt;
}

std::optional<int> find_m0_binary(const Hypergraph& h, double b) {
    if (b <= 0) throw Error(ErrorKind::InvalidParameter, "B must be positive");
    if (h.edge_count() == 0)
        throw Error(ErrorKind::InvalidParameter, "find_m0 needs e(H) > 0");
    require_vertices(h);
    PairCensus census = pair_census(h);
    auto ok = [&](int m) {
        return ratio_from_census(census, h.edge_count(), h.uniformity(), h.vertex_count(), m) <=
               b;
    };
    int lo = 1, hi = h.vertex_count();
    if (!ok(hi)) return std::nullopt;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (ok(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::optional<int> find_m0(const Hypergraph& h, double b) {
    if (m0_ratio_monotone(h)) return find_m0_binary(h, b);
    return find_m0_linear(h, b);
}

}  // namespace hgc
