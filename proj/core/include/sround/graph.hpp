#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sround {

using vertex_t = std::int32_t;
inline constexpr vertex_t no_vertex = -1;

struct Edge {
    vertex_t u;
    vertex_t v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of vertex ids drawn from a fixed universe [0, universe).
/// Keeps a membership bitmap for O(1) lookup plus the members in insertion
/// order for iteration.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}

    /// Duplicates in `ids` are ignored; ids outside the universe throw range_error.
    static VertexSet from(std::size_t universe, std::span<const vertex_t> ids);
    static VertexSet from(std::size_t universe, std::initializer_list<vertex_t> ids) {
        return from(universe, std::span<const vertex_t>(ids.begin(), ids.size()));
    }
    static VertexSet all(std::size_t universe);

    /// Returns false if already present.
    bool insert(vertex_t v);

    bool contains(vertex_t v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_[v] != 0;
    }
    std::size_t size() const noexcept { return list_.size(); }
    bool empty() const noexcept { return list_.empty(); }
    std::size_t universe() const noexcept { return bits_.size(); }

    std::span<const vertex_t> members() const noexcept { return list_; }
    std::vector<vertex_t> sorted() const;

    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::vector<vertex_t> list_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

struct BuildStats {
    std::size_t self_loops = 0;
    std::size_t duplicate_edges = 0;
};

/// Immutable simple undirected graph in CSR form with sorted adjacency.
class Graph {
public:
    Graph() : offsets_(1, 0) {}

    /// Self-loops and duplicate edges are dropped and counted in `stats`.
    /// Endpoints outside [0, n) throw range_error.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats = nullptr);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

    std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(vertex_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(vertex_t u, vertex_t v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    template <class F>
    void for_each_edge(F&& f) const {
        const auto n = static_cast<vertex_t>(num_vertices());
        for (vertex_t u = 0; u < n; ++u) {
            for (vertex_t v : neighbors(u)) {
                if (u < v) f(u, v);
            }
        }
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<vertex_t> adjacency_;
};

/// Induced (or filtered) subgraph materialized with local ids 0..k-1
/// assigned in ascending parent-id order.
class SubgraphView {
public:
    const Graph& graph() const noexcept { return local_; }
    const VertexSet& kept() const noexcept { return kept_; }
    std::size_t parent_size() const noexcept { return to_local_.size(); }

    vertex_t to_parent(vertex_t local) const { return to_parent_.at(local); }
    std::optional<vertex_t> to_local(vertex_t parent) const;

    /// Maps a set over local ids to the same vertices in the parent universe.
    VertexSet to_parent(const VertexSet& local) const;
    /// Keeps the members of `parent` that lie in this view, in local ids.
    VertexSet to_local(const VertexSet& parent) const;

private:
    friend SubgraphView induced_subgraph(const Graph&, const VertexSet&);
    friend SubgraphView cross_subgraph(const Graph&, const VertexSet&, const VertexSet&);

    Graph local_;
    VertexSet kept_;
    std::vector<vertex_t> to_parent_;
    std::vector<vertex_t> to_local_;
};

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertices a ∪ b with only the edges that join a to b. a and b must be disjoint.
SubgraphView cross_subgraph(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// True iff every edge of g[left ∪ right] has one endpoint in each part.
bool is_bipartite_with_parts(const Graph& g, const VertexSet& left, const VertexSet& right);

inline constexpr std::size_t brute_force_cap = 24;

/// Exhaustive minimum vertex cover; among minimum covers the one with the
/// numerically smallest bitmask is returned. Throws size_error above the cap.
VertexSet brute_force_min_vc(const Graph& g);

// ---- edge-list text format ----

struct ParseOptions {
    /// Remap arbitrary ids to [0, n) in ascending order of original id.
    bool compact_ids = false;
};

struct ParsedGraph {
    Graph graph;
    BuildStats stats;
    /// Original id for each vertex when ids were compacted, empty otherwise.
    std::vector<std::uint64_t> original_ids;
};

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});
ParsedGraph load_edge_list(const std::string& path, const ParseOptions& options = {});

/// Writes an "n <count>" header followed by one sorted "u v" line per edge, u < v.
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace sround
