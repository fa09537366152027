#pragma once

#include "sround/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace sround {

/// Partition (O, L, R) of V(G) such that G[L ∪ R] is bipartite with parts L, R.
struct OctDecomposition {
    VertexSet oct;
    VertexSet left;
    VertexSet right;

    /// Swaps the parts so that |left| >= |right|.
    void normalize();
};

/// Throws structure_error unless `d` partitions V(g) and (left, right) is a
/// bipartition of g − oct.
void validate_decomposition(const Graph& g, const OctDecomposition& d);

enum class MisRule {
    Resort,   ///< minimum residual degree, degrees updated as vertices leave
    NoResort, ///< minimum initial degree, ordered once
    Random,   ///< uniform random order
};

std::string_view to_string(MisRule rule) noexcept;
std::optional<MisRule> parse_mis_rule(std::string_view name) noexcept;

/// Greedy maximal independent set of g[active]. Degree ties break toward the
/// smallest id for Resort and NoResort.
VertexSet maximal_independent_set(const Graph& g, const VertexSet& active, MisRule rule, std::uint64_t seed);

/// Two disjoint maximal independent sets become the parts; the rest is the
/// OCT set. The second set is built on g − MIS₁ with degrees measured there.
OctDecomposition mis_oct(const Graph& g, MisRule rule, std::uint64_t seed);

/// BFS-coloring heuristic: visit vertices in a randomized BFS order and put
/// each into left, else right, else the OCT set, whichever has no conflict.
OctDecomposition bfs_oct(const Graph& g, std::uint64_t seed);

/// Three lines: "oct: ids…", "left: ids…", "right: ids…" with ascending ids.
void write_decomposition(std::ostream& out, const OctDecomposition& d);

/// Parses the three-line format for a graph with `n` vertices. Requires every
/// vertex to appear exactly once across the three lines.
OctDecomposition parse_decomposition(std::string_view text, std::size_t n);
OctDecomposition load_decomposition(const std::string& path, std::size_t n);

} // namespace sround
