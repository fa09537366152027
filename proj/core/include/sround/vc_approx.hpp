#pragma once

#include "sround/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sround {

/// How `standard_two_approx` chooses the next edge.
enum class EdgeSelectionRule {
    HighDegree, ///< std-high: edge at a maximum residual-degree vertex
    LowDegree,  ///< std-low: edge at a minimum positive residual-degree vertex
    Random,     ///< std-rand: uniform residual edge
};

std::string_view to_string(EdgeSelectionRule rule) noexcept;
std::optional<EdgeSelectionRule> parse_edge_selection_rule(std::string_view name) noexcept;

struct CoverResult {
    VertexSet cover;
    /// standard: the independent edges branched on; DFS: a matching in the DFS
    /// forest; exact bipartite: the maximum matching; heuristic: empty.
    std::vector<Edge> matched_edges;
    double elapsed = 0.0;
};

/// Gavril/Yannakakis maximal-matching 2-approximation. Degrees are residual:
/// they are updated after every pair of endpoints is removed.
CoverResult standard_two_approx(const Graph& g, EdgeSelectionRule rule, std::uint64_t seed);

/// Savage's 2-approximation: the internal vertices of a DFS forest. One DFS
/// is started from each unvisited vertex in a seed-dependent random order.
CoverResult dfs_two_approx(const Graph& g, std::uint64_t seed);

/// Same, with the DFS start order given explicitly. Vertices missing from
/// `root_order` are used as later roots in ascending id order.
CoverResult dfs_two_approx(const Graph& g, std::span<const vertex_t> root_order);

/// Greedy: repeatedly take the vertex covering the most uncovered edges,
/// smallest id on ties. No approximation guarantee.
CoverResult max_degree_heuristic(const Graph& g);

} // namespace sround
