#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hgc/containers.hpp"
#include "hgc/edge_io.hpp"
#include "hgc/experiments.hpp"
#include "hgc/generators.hpp"
#include "hgc/janson.hpp"
#include "hgc/removal.hpp"
#include "hgc/schedule.hpp"

namespace py = pybind11;
using namespace hgc;

namespace {

VertexSet set_from_ids(int universe, const std::vector<int>& ids) {
    return VertexSet::from_ids(universe, ids);
}

ScheduleOverrides overrides_from_kwargs(std::optional<double> alpha, std::optional<double> xi,
                                        std::optional<double> lambda,
                                        std::optional<double> t_del) {
    ScheduleOverrides ov;
    ov.alpha = alpha;
    ov.xi = xi;
    ov.lambda = lambda;
    ov.t_del = t_del;
    return ov;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hypergraph container machinery (C++ core)";

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init<int>(), py::arg("universe"))
        .def_static("from_ids", &set_from_ids, py::arg("universe"), py::arg("ids"))
        .def_static("full", &VertexSet::full, py::arg("universe"))
        .def("ids", &VertexSet::ids)
        .def("universe", &VertexSet::universe)
        .def("insert", &VertexSet::insert)
        .def("erase", &VertexSet::erase)
        .def("contains", &VertexSet::contains)
        .def("hash", &VertexSet::hash)
        .def("__len__", &VertexSet::size)
        .def("__contains__", &VertexSet::contains)
        .def("__eq__", [](const VertexSet& a, const VertexSet& b) { return a == b; })
        .def("__repr__", [](const VertexSet& s) {
            std::string out = "VertexSet(universe=" + std::to_string(s.universe()) + ", {";
            bool first = true;
            for (int v : s.ids()) {
                if (!first) out += ", ";
                out += std::to_string(v);
                first = false;
            }
            return out + "})";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static(
            "build",
            [](int k, int n, const std::vector<std::vector<int>>& edges) {
                return Hypergraph::build(k, n, edges);
            },
            py::arg("k"), py::arg("n"), py::arg("edges"))
        .def_property_readonly("k", &Hypergraph::uniformity)
        .def_property_readonly("n", &Hypergraph::vertex_count)
        .def_property_readonly("edge_count", &Hypergraph::edge_count)
        .def("edge",
             [](const Hypergraph& h, int e) {
                 auto span = h.edge(e);
                 return std::vector<int>(span.begin(), span.end());
             })
        .def("degree", &Hypergraph::degree)
        .def("induced_edge_count", &Hypergraph::induced_edge_count)
        .def("is_independent", &Hypergraph::is_independent)
        .def("e_at_least", &Hypergraph::e_at_least, py::arg("kprime"), py::arg("d"),
             py::arg("w"))
        .def("deg_at_least", &Hypergraph::deg_at_least, py::arg("v"), py::arg("kprime"),
             py::arg("d"), py::arg("w"))
        .def("content_hash", &Hypergraph::content_hash)
        .def("to_edge_list", [](const Hypergraph& h) { return edge_list_string(h); })
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; });

    m.def("read_edge_list", [](const std::string& text) {
        std::istringstream is(text);
        return read_edge_list(is);
    });
    m.def("triangle_hypergraph", &triangle_hypergraph, py::arg("n"));
    m.def("ap_hypergraph", &ap_hypergraph, py::arg("n"), py::arg("len") = 3);
    m.def("h_copy_hypergraph", &h_copy_hypergraph, py::arg("pattern"), py::arg("n"));
    m.def(
        "random_k_graph",
        [](int k, int n, long long m, uint64_t seed) {
            Rng rng = Rng::stream(seed, "gen-random");
            return random_k_graph(k, n, m, rng);
        },
        py::arg("k"), py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def(
        "sample_uniform_mset",
        [](int n, int m, uint64_t seed, uint64_t index) {
            Rng rng = Rng::stream(seed, "py-uniform", index);
            return sample_uniform_mset(n, m, rng);
        },
        py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("index") = 0);
    m.def(
        "sample_binomial_set",
        [](int n, double p, uint64_t seed, uint64_t index) {
            Rng rng = Rng::stream(seed, "py-binomial", index);
            return sample_binomial_set(n, p, rng);
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("index") = 0);

    py::class_<JansonProfile>(m, "JansonProfile")
        .def_readonly("m", &JansonProfile::m)
        .def_readonly("q", &JansonProfile::q)
        .def_readonly("mu", &JansonProfile::mu)
        .def_readonly("delta", &JansonProfile::delta)
        .def_readonly("delta_hat", &JansonProfile::delta_hat)
        .def_readonly("bound", &JansonProfile::bound);

    m.def("mu", &mu, py::arg("h"), py::arg("m"));
    m.def("delta", &delta, py::arg("h"), py::arg("m"));
    m.def("janson_bound", &janson_bound, py::arg("h"), py::arg("m"));
    m.def("find_m0", &find_m0, py::arg("h"), py::arg("b"));

    py::enum_<ScheduleMode>(m, "ScheduleMode")
        .value("proof", ScheduleMode::Proof)
        .value("empirical", ScheduleMode::Empirical);

    py::class_<ConstantSchedule>(m, "ConstantSchedule")
        .def_readonly("k", &ConstantSchedule::k)
        .def_readonly("epsilon", &ConstantSchedule::epsilon)
        .def_readonly("beta", &ConstantSchedule::beta)
        .def_readonly("t_del", &ConstantSchedule::t_del)
        .def_readonly("gamma", &ConstantSchedule::gamma)
        .def_readonly("alpha", &ConstantSchedule::alpha)
        .def_readonly("xi", &ConstantSchedule::xi)
        .def_readonly("lam", &ConstantSchedule::lambda)
        .def_readwrite("saturation_max_retries", &ConstantSchedule::saturation_max_retries)
        .def("serialize", [](const ConstantSchedule& s) { return serialize_schedule(s); });

    m.def(
        "derive_schedule",
        [](int k, double epsilon, double b, ScheduleMode mode, std::optional<double> alpha,
           std::optional<double> xi, std::optional<double> lambda,
           std::optional<double> t_del) {
            return derive_schedule(k, epsilon, b, mode,
                                   overrides_from_kwargs(alpha, xi, lambda, t_del));
        },
        py::arg("k"), py::arg("epsilon"), py::arg("b") = 10.0,
        py::arg("mode") = ScheduleMode::Empirical, py::arg("alpha") = std::nullopt,
        py::arg("xi") = std::nullopt, py::arg("lambda") = std::nullopt,
        py::arg("t_del") = std::nullopt);
    m.def("parse_schedule", &parse_schedule);

    py::class_<Fingerprint>(m, "Fingerprint")
        .def_readonly("m", &Fingerprint::m)
        .def_readonly("epsilon", &Fingerprint::epsilon)
        .def_readonly("f", &Fingerprint::f)
        .def_readonly("tuple", &Fingerprint::tuple)
        .def("serialize", [](const Fingerprint& fp) { return serialize_fingerprint(fp); });
    m.def("parse_fingerprint", &parse_fingerprint, py::arg("text"), py::arg("universe"));

    py::class_<ContainerTrace>(m, "ContainerTrace")
        .def_readonly("levels", &ContainerTrace::levels)
        .def_readonly("container_edges", &ContainerTrace::container_edges)
        .def_property_readonly("container",
                               [](const ContainerTrace& t) { return t.container(); });

    m.def("compute_container", &compute_container, py::arg("h"), py::arg("fingerprint"),
          py::arg("schedule"));

    py::enum_<OutcomeTag>(m, "OutcomeTag")
        .value("P1", OutcomeTag::P1)
        .value("P2", OutcomeTag::P2)
        .value("BAD", OutcomeTag::Bad);

    py::class_<ExtractionOutcome>(m, "ExtractionOutcome")
        .def_readonly("tag", &ExtractionOutcome::tag)
        .def_readonly("induced_edges", &ExtractionOutcome::induced_edges)
        .def_readonly("fingerprint", &ExtractionOutcome::fingerprint)
        .def_readonly("trace", &ExtractionOutcome::trace)
        .def_readonly("residue", &ExtractionOutcome::residue)
        .def_readonly("pruned", &ExtractionOutcome::pruned)
        .def_property_readonly("reason", [](const ExtractionOutcome& o) {
            return std::string(to_string(o.reason));
        });

    m.def(
        "extract_fingerprint",
        [](const Hypergraph& h, const VertexSet& i_set, const ConstantSchedule& schedule,
           uint64_t seed) {
            Rng rng = Rng::stream(seed, "extract", i_set.hash());
            return extract_fingerprint(h, i_set, schedule, rng);
        },
        py::arg("h"), py::arg("i_set"), py::arg("schedule"), py::arg("seed"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("containment", &VerifyReport::containment)
        .def_readonly("container_sparse", &VerifyReport::container_sparse)
        .def_readonly("fingerprint_size", &VerifyReport::fingerprint_size)
        .def_readonly("tuple_subsets", &VerifyReport::tuple_subsets)
        .def_readonly("container_edges", &VerifyReport::container_edges)
        .def_readonly("container_hash", &VerifyReport::container_hash)
        .def("all_passed", &VerifyReport::all_passed);

    m.def("verify_container", &verify_container, py::arg("h"), py::arg("i_set"),
          py::arg("outcome"), py::arg("schedule"));

    py::class_<RemovabilityReport>(m, "RemovabilityReport")
        .def_readonly("induced_edges", &RemovabilityReport::induced_edges)
        .def_readonly("witness", &RemovabilityReport::witness)
        .def_readonly("min_witness_size", &RemovabilityReport::min_witness_size)
        .def_readonly("exact", &RemovabilityReport::exact);

    m.def("min_removal_witness", &min_removal_witness, py::arg("h"), py::arg("i_set"),
          py::arg("r_budget"));
    m.def("m_k_density", [](const Hypergraph& pattern) {
        Rational r = m_k_density(pattern);
        return std::pair<long long, long long>(r.num, r.den);
    });

    py::class_<TrichotomySummary>(m, "TrichotomySummary")
        .def_readonly("m", &TrichotomySummary::m)
        .def_readonly("trials", &TrichotomySummary::trials)
        .def_readonly("p1", &TrichotomySummary::p1)
        .def_readonly("p2", &TrichotomySummary::p2)
        .def_readonly("bad", &TrichotomySummary::bad)
        .def_readonly("verify_failures", &TrichotomySummary::verify_failures)
        .def("p1_fraction", &TrichotomySummary::p1_fraction)
        .def("p2_fraction", &TrichotomySummary::p2_fraction)
        .def("bad_fraction", &TrichotomySummary::bad_fraction)
        .def("mean_container_size", &TrichotomySummary::mean_container_size);

    m.def("mc_trichotomy", &mc_trichotomy, py::arg("h"), py::arg("m"), py::arg("schedule"),
          py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def("brute_force_scan", &brute_force_scan, py::arg("h"), py::arg("m"),
          py::arg("schedule"), py::arg("seed"), py::arg("threads") = 1);

    py::class_<IndependenceEstimate>(m, "IndependenceEstimate")
        .def_readonly("trials", &IndependenceEstimate::trials)
        .def_readonly("hits", &IndependenceEstimate::hits)
        .def_readonly("estimate", &IndependenceEstimate::estimate)
        .def_readonly("lo", &IndependenceEstimate::lo)
        .def_readonly("hi", &IndependenceEstimate::hi);

    m.def("mc_independence", &mc_independence, py::arg("h"), py::arg("m"), py::arg("trials"),
          py::arg("seed"), py::arg("threads") = 1);
}
