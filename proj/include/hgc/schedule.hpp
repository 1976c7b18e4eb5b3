#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

enum class ScheduleMode { Proof, Empirical };

/// Per-level overrides for empirical schedules. A single value pins every
/// level; the per-level maps win over the flat value where both are set.
struct ScheduleOverrides {
    std::optional<double> alpha;
    std::optional<double> xi;
    std::optional<double> lambda;
    std::optional<double> t_del;
    std::map<int, double> alpha_by_level;
    std::map<int, double> xi_by_level;
    std::map<int, double> lambda_by_level;
};

/// Constant schedule for container extraction on a k-graph.
///
/// Structural identities (both modes):
///   beta = eps / (2 k^2),  lambda[0] = eps,  gamma[k'] = lambda[k'-1] eps / (2 k^2).
///
/// Proof mode derives the remaining entries from the deletion parameter T:
///   Z[k'] = 5 gamma[k']^-2 18^{2k} T B,  alpha[k'] = 1 / (4 2^{2k} Z[k']),
///   xi[k'] = alpha[k'] eps / (4 k^2),    lambda[k'] = gamma[k'] (xi[k']/2)^{k'} / 4.
/// These shrink doubly exponentially in k (and underflow doubles at k = 4),
/// so proof mode is for inspecting the cascade, not for running experiments.
///
/// Empirical mode keeps the identities for beta and gamma and starts from
/// tunable defaults: alpha = 0.05, lambda[k'] = gamma[k']/4, xi = 1.0,
/// T = 8. Overriding alpha without xi re-derives xi = alpha eps / (4 k^2).
struct ConstantSchedule {
    int k = 0;
    double epsilon = 0.0;
    double b = 0.0;
    ScheduleMode mode = ScheduleMode::Empirical;
    double beta = 0.0;
    double t_del = 0.0;
    int saturation_max_retries = 64;

    // Indexed by level k' in [0, k]; index 0 is used only by lambda.
    std::vector<double> gamma;   // gamma[1..k]
    std::vector<double> alpha;   // alpha[1..k-1]
    std::vector<double> xi;      // xi[1..k-1]
    std::vector<double> lambda;  // lambda[0..k-1]
    std::vector<double> z;       // z[1..k-1], informational

    /// t_{k'}(m) = lambda[k'] e(H) (m/N)^{k'}.
    double threshold(int kprime, const Hypergraph& h, int m) const;

    /// gamma[k'] e(H) (m/N)^{k'}, the density guard at level k'.
    double density_guard(int kprime, const Hypergraph& h, int m) const;
};

ConstantSchedule derive_schedule(int k, double epsilon, double b, ScheduleMode mode,
                                 const ScheduleOverrides& overrides = {});

/// Flat key=value text form; parse(serialize(s)) reproduces s exactly.
std::string serialize_schedule(const ConstantSchedule& s);
ConstantSchedule parse_schedule(const std::string& text);

}  // namespace hgc
