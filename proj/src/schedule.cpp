#include "hgc/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

double ConstantSchedule::threshold(int kprime, const Hypergraph& h, int m) const {
    double q = static_cast<double>(m) / h.vertex_count();
    return lambda[kprime] * h.edge_count() * std::pow(q, kprime);
}

double ConstantSchedule::density_guard(int kprime, const Hypergraph& h, int m) const {
    double q = static_cast<double>(m) / h.vertex_count();
    return gamma[kprime] * h.edge_count() * std::pow(q, kprime);
}

ConstantSchedule derive_schedule(int k, double epsilon, double b, ScheduleMode mode,
                                 const ScheduleOverrides& overrides) {
    if (k < 2) throw Error(ErrorKind::InvalidParameter, "schedule needs k >= 2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw Error(ErrorKind::InvalidParameter, "epsilon must lie in (0, 1)");
    if (!(b > 0.0)) throw Error(ErrorKind::InvalidParameter, "B must be positive");

    ConstantSchedule s;
    s.k = k;
    s.epsilon = epsilon;
    s.b = b;
    s.mode = mode;
    s.beta = epsilon / (2.0 * k * k);
    s.gamma.assign(k + 1, 0.0);
    s.alpha.assign(k + 1, 0.0);
    s.xi.assign(k + 1, 0.0);
    s.lambda.assign(k + 1, 0.0);
    s.z.assign(k + 1, 0.0);
    s.lambda[0] = epsilon;

    auto pick = [](const std::optional<double>& flat, const std::map<int, double>& per_level,
                   int level, double fallback) {
        auto it = per_level.find(level);
        if (it != per_level.end()) return it->second;
        if (flat) return *flat;
        return fallback;
    };

    if (mode == ScheduleMode::Proof) {
        s.t_del = overrides.t_del.value_or(2.0);
        if (!(s.t_del > 1.0))
            throw Error(ErrorKind::InvalidParameter, "proof mode needs T > 1");
        const double pow18 = std::pow(18.0, 2 * k);
        const double pow2 = std::pow(2.0, 2 * k);
        for (int kp = 1; kp <= k; ++kp) {
            s.gamma[kp] = s.lambda[kp - 1] * epsilon / (2.0 * k * k);
            if (kp == k) break;
            s.z[kp] = 5.0 / (s.gamma[kp] * s.gamma[kp]) * pow18 * s.t_del * b;
            s.alpha[kp] = 1.0 / (4.0 * pow2 * s.z[kp]);
            s.xi[kp] = s.alpha[kp] * epsilon / (4.0 * k * k);
            s.lambda[kp] = s.gamma[kp] * std::pow(s.xi[kp] / 2.0, kp) / 4.0;
        }
    } else {
        s.t_del = overrides.t_del.value_or(8.0);
        if (!(s.t_del > 0.0))
            throw Error(ErrorKind::InvalidParameter, "T must be positive");
        for (int kp = 1; kp <= k; ++kp) {
            s.gamma[kp] = s.lambda[kp - 1] * epsilon / (2.0 * k * k);
            if (kp == k) break;
            s.alpha[kp] = pick(overrides.alpha, overrides.alpha_by_level, kp, 0.05);
            bool alpha_pinned = overrides.alpha.has_value() ||
                                overrides.alpha_by_level.count(kp) > 0;
            bool xi_pinned =
                overrides.xi.has_value() || overrides.xi_by_level.count(kp) > 0;
            double xi_default = alpha_pinned && !xi_pinned
                                    ? s.alpha[kp] * epsilon / (4.0 * k * k)
                                    : 1.0;
            s.xi[kp] = pick(overrides.xi, overrides.xi_by_level, kp, xi_default);
            s.lambda[kp] =
                pick(overrides.lambda, overrides.lambda_by_level, kp, s.gamma[kp] / 4.0);
        }
    }

    // The proof-mode cascade shrinks doubly exponentially in k; double
    // precision underflows around k = 4. Surface that as a clear error.
    for (int kp = 1; kp <= k; ++kp)
        if (!(s.gamma[kp] > 0.0) || !std::isfinite(s.gamma[kp]))
            throw Error(ErrorKind::InvalidParameter,
                        "derived gamma not positive (proof-mode constants underflow "
                        "double precision at this k/epsilon)");
    for (int kp = 1; kp < k; ++kp)
        if (!(s.alpha[kp] > 0.0 && s.xi[kp] > 0.0 && s.lambda[kp] > 0.0))
            throw Error(ErrorKind::InvalidParameter,
                        "schedule entries must be positive (underflow or bad override)");
    return s;
}

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string serialize_schedule(const ConstantSchedule& s) {
    std::ostringstream os;
    os << "k=" << s.k << '\n';
    os << "epsilon=" << fmt_double(s.epsilon) << '\n';
    os << "B=" << fmt_double(s.b) << '\n';
    os << "mode=" << (s.mode == ScheduleMode::Proof ? "proof" : "empirical") << '\n';
    os << "beta=" << fmt_double(s.beta) << '\n';
    os << "T_del=" << fmt_double(s.t_del) << '\n';
    os << "saturation_max_retries=" << s.saturation_max_retries << '\n';
    for (int kp = 1; kp <= s.k; ++kp) os << "gamma_" << kp << '=' << fmt_double(s.gamma[kp]) << '\n';
    for (int kp = 1; kp < s.k; ++kp) os << "alpha_" << kp << '=' << fmt_double(s.alpha[kp]) << '\n';
    for (int kp = 1; kp < s.k; ++kp) os << "xi_" << kp << '=' << fmt_double(s.xi[kp]) << '\n';
    for (int kp = 0; kp < s.k; ++kp) os << "lambda_" << kp << '=' << fmt_double(s.lambda[kp]) << '\n';
    for (int kp = 1; kp < s.k; ++kp) os << "Z_" << kp << '=' << fmt_double(s.z[kp]) << '\n';
    return os.str();
}

ConstantSchedule parse_schedule(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::IOError, "schedule: malformed line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw Error(ErrorKind::IOError, "schedule: missing key " + key);
        return it->second;
    };

    ConstantSchedule s;
    s.k = std::stoi(need("k"));
    if (s.k < 2) throw Error(ErrorKind::IOError, "schedule: bad k");
    s.epsilon = std::stod(need("epsilon"));
    s.b = std::stod(need("B"));
    const std::string& mode = need("mode");
    if (mode == "proof")
        s.mode = ScheduleMode::Proof;
    else if (mode == "empirical")
        s.mode = ScheduleMode::Empirical;
    else
        throw Error(ErrorKind::IOError, "schedule: unknown mode " + mode);
    s.beta = std::stod(need("beta"));
    s.t_del = std::stod(need("T_del"));
    s.saturation_max_retries = std::stoi(need("saturation_max_retries"));
    s.gamma.assign(s.k + 1, 0.0);
    s.alpha.assign(s.k + 1, 0.0);
    s.xi.assign(s.k + 1, 0.0);
    s.lambda.assign(s.k + 1, 0.0);
    s.z.assign(s.k + 1, 0.0);
    for (int kp = 1; kp <= s.k; ++kp) s.gamma[kp] = std::stod(need("gamma_" + std::to_string(kp)));
    for (int kp = 1; kp < s.k; ++kp) s.alpha[kp] = std::stod(need("alpha_" + std::to_string(kp)));
    for (int kp = 1; kp < s.k; ++kp) s.xi[kp] = std::stod(need("xi_" + std::to_string(kp)));
    for (int kp = 0; kp < s.k; ++kp) s.lambda[kp] = std::stod(need("lambda_" + std::to_string(kp)));
    for (int kp = 1; kp < s.k; ++kp) s.z[kp] = std::stod(need("Z_" + std::to_string(kp)));
    return s;
}

}  // namespace hgc
