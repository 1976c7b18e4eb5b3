#pragma once

#include "hgc/hypergraph.hpp"
#include "hgc/rng.hpp"
#include "hgc/vertex_set.hpp"

namespace hgc {

/// 3-graph on the edges of K_n: vertex ids are the lexicographic ranks of
/// the pairs {a,b}, a < b, and three vertices form a hyperedge when the
/// corresponding K_n edges form a triangle. n >= 3.
Hypergraph triangle_hypergraph(int n);

/// Lexicographic rank of the K_n edge {a,b}, a < b. Exposed so callers can
/// translate between K_n edges and triangle_hypergraph vertex ids.
int pair_rank(int n, int a, int b);

/// len-graph on vertices {0,...,n-1} standing for the integers {1,...,n};
/// edges are the len-term arithmetic progressions with positive difference.
Hypergraph ap_hypergraph(int n, int len = 3);

/// e(pattern)-graph whose vertices are the k-subsets of [n] (lex rank order)
/// and whose hyperedges are the distinct copies of `pattern` in the complete
/// k-graph on n vertices; copies are counted as edge-subsets, so automorphic
/// images collapse. Pattern vertices that lie in no pattern edge are ignored.
Hypergraph h_copy_hypergraph(const Hypergraph& pattern, int n);

/// Uniform m-subset of [0, N); deterministic given the rng state.
VertexSet sample_uniform_mset(int n, int m, Rng& rng);

/// Includes each vertex of [0, N) independently with probability p.
VertexSet sample_binomial_set(int n, double p, Rng& rng);

/// M distinct k-edges sampled uniformly without replacement.
Hypergraph random_k_graph(int k, int n, long long m, Rng& rng);

/// C(n, r) saturating at `cap` to keep feasibility checks overflow-safe.
long long binomial_capped(int n, int r, long long cap);

}  // namespace hgc
