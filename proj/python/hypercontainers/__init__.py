"""Hypergraph container machinery: generators, Janson quantities, container
extraction and verification, removability experiments. Thin wrapper around
the C++ core."""

from hypercontainers._core import (
    ConstantSchedule,
    ContainerTrace,
    ExtractionOutcome,
    Fingerprint,
    Hypergraph,
    IndependenceEstimate,
    JansonProfile,
    OutcomeTag,
    RemovabilityReport,
    ScheduleMode,
    TrichotomySummary,
    VerifyReport,
    VertexSet,
    ap_hypergraph,
    brute_force_scan,
    compute_container,
    delta,
    derive_schedule,
    extract_fingerprint,
    find_m0,
    h_copy_hypergraph,
    janson_bound,
    m_k_density,
    mc_independence,
    mc_trichotomy,
    min_removal_witness,
    mu,
    parse_fingerprint,
    parse_schedule,
    random_k_graph,
    read_edge_list,
    sample_binomial_set,
    sample_uniform_mset,
    triangle_hypergraph,
    verify_container,
)

__all__ = [
    "ConstantSchedule",
    "ContainerTrace",
    "ExtractionOutcome",
    "Fingerprint",
    "Hypergraph",
    "IndependenceEstimate",
    "JansonProfile",
    "OutcomeTag",
    "RemovabilityReport",
    "ScheduleMode",
    "TrichotomySummary",
    "VerifyReport",
    "VertexSet",
    "ap_hypergraph",
    "brute_force_scan",
    "compute_container",
    "delta",
    "derive_schedule",
    "extract_fingerprint",
    "find_m0",
    "h_copy_hypergraph",
    "janson_bound",
    "m_k_density",
    "mc_independence",
    "mc_trichotomy",
    "min_removal_witness",
    "mu",
    "parse_fingerprint",
    "parse_schedule",
    "random_k_graph",
    "read_edge_list",
    "sample_binomial_set",
    "sample_uniform_mset",
    "triangle_hypergraph",
    "verify_container",
]

__version__ = "0.1.0"
