#pragma once

#include "sround/graph.hpp"
#include "sround/vc_approx.hpp"

#include <cstdint>
#include <vector>

namespace sround {

struct Matching {
    /// Partner of each vertex, no_vertex when unmatched.
    std::vector<vertex_t> mate;
    std::size_t size = 0;

    bool matched(vertex_t v) const { return mate[v] != no_vertex; }
    /// Matched pairs as (left vertex, right vertex) in ascending left order.
    std::vector<Edge> edges(const VertexSet& left) const;
};

/// Hopcroft-Karp maximum matching. Every edge of g must join `left` to
/// `right` (structure_error otherwise). The seed permutes the order in which
/// free left vertices are tried; it never changes the matching size.
Matching hopcroft_karp(const Graph& g, const VertexSet& left, const VertexSet& right, std::uint64_t seed);

/// König conversion: Z = vertices reachable from free left vertices by
/// alternating paths, cover = (left \ Z) ∪ (right ∩ Z). Iterative. Throws
/// contract_error if an augmenting path shows the matching is not maximum.
VertexSet koenig_cover(const Graph& g, const VertexSet& left, const VertexSet& right, const Matching& matching);

/// Exact minimum vertex cover of a bipartite graph; `matched_edges` holds the
/// maximum matching.
CoverResult min_vc_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right, std::uint64_t seed);

} // namespace sround
