// Command-line front end: generation, janson sweeps, trichotomy and
// independence experiments, removal transference, fingerprint verification.
// Exit code 0 only when every internal invariant check passes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgc/containers.hpp"
#include "hgc/edge_io.hpp"
#include "hgc/errors.hpp"
#include "hgc/experiments.hpp"
#include "hgc/generators.hpp"
#include "hgc/janson.hpp"
#include "hgc/removal.hpp"
#include "hgc/schedule.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    int threads = 1;
    std::string out_dir = ".";
};

struct ScheduleOpts {
    double epsilon = 0.9;
    double b = 10.0;
    std::string mode = "empirical";
    double t_del = -1.0;
    double alpha = -1.0;
    double xi = -1.0;
    double lambda = -1.0;
    int max_retries = 64;

    hgc::ConstantSchedule build(int k) const {
        hgc::ScheduleOverrides ov;
        if (t_del > 0) ov.t_del = t_del;
        if (alpha > 0) ov.alpha = alpha;
        if (xi > 0) ov.xi = xi;
        if (lambda > 0) ov.lambda = lambda;
        hgc::ScheduleMode m = mode == "proof" ? hgc::ScheduleMode::Proof
                                              : hgc::ScheduleMode::Empirical;
        hgc::ConstantSchedule s = hgc::derive_schedule(k, epsilon, b, m, ov);
        s.saturation_max_retries = max_retries;
        return s;
    }
};

void add_schedule_flags(CLI::App* cmd, ScheduleOpts& opts) {
    cmd->add_option("--epsilon", opts.epsilon, "container sparsity parameter in (0,1)");
    cmd->add_option("--B", opts.b, "m0 relation constant");
    cmd->add_option("--mode", opts.mode, "schedule mode: empirical|proof")
        ->check(CLI::IsMember({"empirical", "proof"}));
    cmd->add_option("--t-del", opts.t_del, "deletion parameter T");
    cmd->add_option("--alpha", opts.alpha, "pin alpha at every level");
    cmd->add_option("--xi", opts.xi, "pin xi at every level");
    cmd->add_option("--lambda", opts.lambda, "pin lambda at every level");
    cmd->add_option("--max-retries", opts.max_retries, "saturating-set sample retries");
}

std::vector<int> parse_range(const std::string& text) {
    // "a:b:step" inclusive grid, or a single value.
    std::vector<int> out;
    int a = 0, b = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (text.find(':') == std::string::npos) {
        if (!(is >> a)) throw hgc::Error(hgc::ErrorKind::InvalidParameter, "bad m range");
        out.push_back(a);
        return out;
    }
    if (!(is >> a >> c1 >> b) || c1 != ':')
        throw hgc::Error(hgc::ErrorKind::InvalidParameter, "bad m range: " + text);
    if (is >> c2 >> step) {
        if (c2 != ':' || step <= 0)
            throw hgc::Error(hgc::ErrorKind::InvalidParameter, "bad m range: " + text);
    }
    for (int m = a; m <= b; m += step) out.push_back(m);
    return out;
}

hgc::VertexSet read_vertex_set(const std::string& path, int universe) {
    std::ifstream in(path);
    if (!in) throw hgc::Error(hgc::ErrorKind::IOError, "cannot open " + path);
    hgc::VertexSet s(universe);
    int v;
    while (in >> v) s.insert(v);
    return s;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hgc::Error(hgc::ErrorKind::IOError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ordered_json summary_json(const hgc::TrichotomySummary& s, long long instance_edges,
                          bool include_bad_list) {
    ordered_json j;
    j["m"] = s.m;
    j["trials"] = s.trials;
    j["p1"] = s.p1;
    j["p2"] = s.p2;
    j["bad"] = s.bad;
    j["p1_fraction"] = hgc::fmt_g(s.p1_fraction());
    j["p2_fraction"] = hgc::fmt_g(s.p2_fraction());
    j["bad_fraction"] = hgc::fmt_g(s.bad_fraction());
    j["verify_pass_rate"] = hgc::fmt_g(
        s.p2 ? static_cast<double>(s.p2 - s.verify_failures) / s.p2 : 1.0);
    j["verify_failures"] = s.verify_failures;
    j["mean_container_size"] = hgc::fmt_g(s.mean_container_size());
    j["mean_container_edge_fraction"] = hgc::fmt_g(
        s.p2 && instance_edges
            ? static_cast<double>(s.container_edges_sum) / s.p2 / instance_edges
            : 0.0);
    j["max_level_iterations"] = s.max_level_iterations;
    j["iteration_cap"] = s.iteration_cap;
    j["seed"] = s.seed;
    if (include_bad_list) {
        ordered_json bad = ordered_json::array();
        for (const auto& rec : s.bad_exemplars) {
            ordered_json r;
            r["trial"] = rec.trial;
            r["subset"] = rec.subset_ids;
            r["reason"] = hgc::to_string(rec.reason);
            r["detail"] = rec.detail;
            bad.push_back(r);
        }
        j["bad_exemplars"] = bad;
    }
    return j;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw hgc::Error(hgc::ErrorKind::IOError, "cannot write " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic hypergraph container experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value config file mirroring the flags");

    GlobalOpts global;
    app.add_option("--seed", global.seed, "master seed")->capture_default_str();
    app.add_option("--threads", global.threads, "worker threads")->capture_default_str();
    app.add_option("--out-dir", global.out_dir, "output directory")->capture_default_str();

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "emit a hypergraph in edge-list format");
    std::string family = "ap";
    int gen_n = 9, gen_len = 3, gen_k = 3;
    long long gen_edges = 0;
    std::string pattern_path, gen_out;
    gen->add_option("--family", family, "triangle|ap|random|hcopy")
        ->check(CLI::IsMember({"triangle", "ap", "random", "hcopy"}));
    gen->add_option("--n", gen_n, "ground-set size");
    gen->add_option("--len", gen_len, "progression length for ap");
    gen->add_option("--k", gen_k, "uniformity for random");
    gen->add_option("--edges", gen_edges, "edge count for random");
    gen->add_option("--pattern", pattern_path, "pattern edge-list for hcopy");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // ---- janson -------------------------------------------------------
    auto* janson_cmd = app.add_subcommand("janson", "mu/delta/bound sweep as CSV");
    std::string janson_input, janson_range = "1:0", janson_out;
    double janson_b = 10.0;
    janson_cmd->add_option("--input", janson_input, "edge-list file")->required();
    janson_cmd->add_option("--m-range", janson_range, "a:b:step grid")->required();
    janson_cmd->add_option("--B", janson_b, "threshold constant for the ratio column");
    janson_cmd->add_option("--out", janson_out, "output path (default stdout)");

    // ---- trichotomy ---------------------------------------------------
    auto* tri = app.add_subcommand("trichotomy", "monte carlo P1/P2/BAD measurement");
    std::string tri_input;
    int tri_m = 4;
    long long tri_trials = 1000;
    ScheduleOpts tri_sched;
    tri->add_option("--input", tri_input, "edge-list file")->required();
    tri->add_option("--m", tri_m, "sample size")->required();
    tri->add_option("--trials", tri_trials, "number of samples");
    add_schedule_flags(tri, tri_sched);

    // ---- brute --------------------------------------------------------
    auto* brute = app.add_subcommand("brute", "exhaustive classification of all m-subsets");
    std::string brute_input;
    int brute_m = 3;
    ScheduleOpts brute_sched;
    brute->add_option("--input", brute_input, "edge-list file")->required();
    brute->add_option("--m", brute_m, "subset size")->required();
    add_schedule_flags(brute, brute_sched);

    // ---- independence -------------------------------------------------
    auto* indep = app.add_subcommand("independence", "Pr[I independent] estimate");
    std::string indep_input;
    int indep_m = 4;
    long long indep_trials = 10000;
    indep->add_option("--input", indep_input, "edge-list file")->required();
    indep->add_option("--m", indep_m, "sample size")->required();
    indep->add_option("--trials", indep_trials, "number of samples");

    // ---- removal-transfer ---------------------------------------------
    auto* transfer = app.add_subcommand("removal-transfer",
                                        "random sparsification transference experiment");
    std::string transfer_input;
    double transfer_gamma = 0.5, transfer_alpha = 1.0 / 3.0, transfer_p = 0.7;
    int transfer_trials = 50;
    transfer->add_option("--input", transfer_input, "edge-list file")->required();
    transfer->add_option("--gamma", transfer_gamma, "removability edge fraction");
    transfer->add_option("--alpha", transfer_alpha, "removability budget fraction");
    transfer->add_option("--p", transfer_p, "sparsification probability");
    transfer->add_option("--trials", transfer_trials, "trial count");

    // ---- verify-fingerprint --------------------------------------------
    auto* verify = app.add_subcommand("verify-fingerprint",
                                      "recompute a container from a serialized fingerprint");
    std::string verify_input, verify_fp, verify_set, verify_sched_path;
    verify->add_option("--input", verify_input, "edge-list file")->required();
    verify->add_option("--fingerprint", verify_fp, "fingerprint record")->required();
    verify->add_option("--set", verify_set, "vertex ids of the sampled set I")->required();
    verify->add_option("--schedule", verify_sched_path, "serialized schedule")->required();

    // ---- sweep ----------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "janson + trichotomy + independence grid");
    std::string sweep_input, sweep_range;
    long long sweep_tri_trials = 1000, sweep_ind_trials = 1000;
    ScheduleOpts sweep_sched;
    sweep->add_option("--input", sweep_input, "edge-list file")->required();
    sweep->add_option("--m-range", sweep_range, "a:b:step grid")->required();
    sweep->add_option("--trials", sweep_tri_trials, "trichotomy trials per m");
    sweep->add_option("--ind-trials", sweep_ind_trials, "independence trials per m");
    add_schedule_flags(sweep, sweep_sched);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            hgc::Hypergraph h = [&]() {
                if (family == "triangle") return hgc::triangle_hypergraph(gen_n);
                if (family == "ap") return hgc::ap_hypergraph(gen_n, gen_len);
                if (family == "hcopy") {
                    hgc::Hypergraph pattern = hgc::read_edge_list_file(pattern_path);
                    return hgc::h_copy_hypergraph(pattern, gen_n);
                }
                hgc::Rng rng = hgc::Rng::stream(global.seed, "gen-random");
                return hgc::random_k_graph(gen_k, gen_n, gen_edges, rng);
            }();
            write_or_print(hgc::edge_list_string(h), gen_out);
            return 0;
        }

        if (janson_cmd->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(janson_input);
            std::ostringstream csv;
            csv << "m,mu,delta,delta_hat,bound,ratio\n";
            for (int m : parse_range(janson_range)) {
                hgc::JansonProfile p = hgc::janson_bound(h, m);
                double ratio =
                    p.mu > 0 ? p.delta * m / (p.mu * p.mu) : 0.0;
                csv << m << ',' << hgc::fmt_g(p.mu) << ',' << hgc::fmt_g(p.delta) << ','
                    << hgc::fmt_g(p.delta_hat) << ',' << hgc::fmt_g(p.bound) << ','
                    << hgc::fmt_g(ratio) << '\n';
            }
            write_or_print(csv.str(), janson_out);
            return 0;
        }

        if (tri->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(tri_input);
            hgc::ConstantSchedule sched = tri_sched.build(h.uniformity());
            hgc::TrichotomySummary s =
                hgc::mc_trichotomy(h, tri_m, sched, tri_trials, global.seed, global.threads);
            std::cout << summary_json(s, h.edge_count(), false).dump(2) << '\n';
            return s.verify_failures == 0 ? 0 : 1;
        }

        if (brute->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(brute_input);
            hgc::ConstantSchedule sched = brute_sched.build(h.uniformity());
            hgc::TrichotomySummary s =
                hgc::brute_force_scan(h, brute_m, sched, global.seed, global.threads);
            std::cout << summary_json(s, h.edge_count(), true).dump(2) << '\n';
            return s.verify_failures == 0 ? 0 : 1;
        }

        if (indep->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(indep_input);
            hgc::IndependenceEstimate est =
                hgc::mc_independence(h, indep_m, indep_trials, global.seed, global.threads);
            ordered_json j;
            j["m"] = indep_m;
            j["trials"] = est.trials;
            j["hits"] = est.hits;
            j["estimate"] = hgc::fmt_g(est.estimate);
            j["wilson_lo"] = hgc::fmt_g(est.lo);
            j["wilson_hi"] = hgc::fmt_g(est.hi);
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (transfer->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(transfer_input);
            hgc::TransferenceStats stats = hgc::transference_experiment(
                h, transfer_gamma, transfer_alpha, transfer_p, transfer_trials, global.seed);
            fs::create_directories(global.out_dir);
            std::string csv_path =
                (fs::path(global.out_dir) / "transference_trials.csv").string();
            std::ostringstream csv;
            csv << "trial,w_size,pass,subsets_checked,sampled\n";
            for (const auto& t : stats.per_trial)
                csv << t.index << ',' << t.w_size << ',' << (t.pass ? 1 : 0) << ','
                    << t.subsets_checked << ',' << (t.sampled ? 1 : 0) << '\n';
            write_or_print(csv.str(), csv_path);

            ordered_json j;
            j["gamma"] = hgc::fmt_g(stats.gamma);
            j["alpha"] = hgc::fmt_g(stats.alpha);
            j["p"] = hgc::fmt_g(stats.p);
            j["conclusion_edge_threshold"] = hgc::fmt_g(stats.conclusion_s);
            j["conclusion_budget"] = hgc::fmt_g(stats.conclusion_r);
            j["trials"] = stats.trials;
            j["passes"] = stats.passes;
            j["pass_fraction"] =
                hgc::fmt_g(stats.trials ? static_cast<double>(stats.passes) / stats.trials
                                        : 0.0);
            j["sampled"] = stats.any_sampled;
            j["per_trial_csv"] = csv_path;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (verify->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(verify_input);
            hgc::ConstantSchedule sched = hgc::parse_schedule(slurp_file(verify_sched_path));
            hgc::Fingerprint fp =
                hgc::parse_fingerprint(slurp_file(verify_fp), h.vertex_count());
            hgc::VertexSet i_set = read_vertex_set(verify_set, h.vertex_count());
            hgc::ExtractionOutcome outcome;
            outcome.tag = hgc::OutcomeTag::P2;
            outcome.fingerprint = fp;
            hgc::VerifyReport report = hgc::verify_container(h, i_set, outcome, sched);
            ordered_json j;
            j["containment"] = report.containment;
            j["container_sparse"] = report.container_sparse;
            j["fingerprint_size"] = report.fingerprint_size;
            j["tuple_subsets"] = report.tuple_subsets;
            j["container_edges"] = report.container_edges;
            j["sparsity_limit"] = hgc::fmt_g(report.sparsity_limit);
            j["container_hash"] = report.container_hash;
            j["all_passed"] = report.all_passed();
            std::cout << j.dump(2) << '\n';
            return report.all_passed() ? 0 : 1;
        }

        if (sweep->parsed()) {
            hgc::Hypergraph h = hgc::read_edge_list_file(sweep_input);
            hgc::ConstantSchedule sched = sweep_sched.build(h.uniformity());
            hgc::SweepConfig config;
            config.m_values = parse_range(sweep_range);
            config.trichotomy_trials = sweep_tri_trials;
            config.independence_trials = sweep_ind_trials;
            config.seed = global.seed;
            config.threads = global.threads;
            config.out_dir = global.out_dir;
            hgc::SweepResult result = hgc::sweep_report(h, sched, config);
            ordered_json j;
            j["csv"] = result.csv_path;
            j["manifest"] = result.manifest_path;
            j["verify_failures"] = result.verify_failures;
            j["janson_bound_respected"] = result.janson_bound_respected;
            std::cout << j.dump(2) << '\n';
            return (result.verify_failures == 0 && result.janson_bound_respected) ? 0 : 1;
        }
    } catch (const hgc::Error& e) {
        std::cerr << "error (" << hgc::to_string(e.kind()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
