#pragma once

// Reference implementations used only by the tests. They work directly on
// edge lists and exhaustive enumeration, sharing no code with the library
// algorithms they check.

#include "sround/graph.hpp"
#include "sround/lifting.hpp"
#include "sround/rng.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using sround::Edge;
using sround::Graph;
using sround::vertex_t;
using sround::VertexSet;

inline bool covers(const std::vector<Edge>& edges, const std::vector<bool>& in) {
    for (const Edge& e : edges) {
        if (!in[e.u] && !in[e.v]) return false;
    }
    return true;
}

inline bool covers(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges()) {
        if (!s.contains(e.u) && !s.contains(e.v)) return false;
    }
    return true;
}

/// Minimum number of vertices from `pool` that cover `edges`. Every edge
/// must have an endpoint in the pool. Enumerates subsets by size.
inline std::size_t min_cover_size(std::size_t n, const std::vector<Edge>& edges, const std::vector<vertex_t>& pool) {
    const std::size_t k = pool.size();
    if (k > 24) throw std::length_error("oracle pool too large");
    std::size_t best = k;
    std::vector<bool> in(n);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const auto bits = static_cast<std::size_t>(std::popcount(mask));
        if (bits >= best) continue;
        std::fill(in.begin(), in.end(), false);
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) in[pool[i]] = true;
        }
        if (covers(edges, in)) best = bits;
    }
    return best;
}

inline std::size_t min_vc_size(const Graph& g) {
    std::vector<vertex_t> all(g.num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<vertex_t>(v);
    return min_cover_size(g.num_vertices(), g.edges(), all);
}

/// Edges of g not covered by S'.
inline std::vector<Edge> uncovered_edges(const sround::LiftContext& ctx) {
    std::vector<Edge> out;
    for (const Edge& e : ctx.graph().edges()) {
        if (!ctx.edited_solution().contains(e.u) && !ctx.edited_solution().contains(e.v)) out.push_back(e);
    }
    return out;
}

/// |L*|: fewest vertices outside S' that cover the edges S' misses.
inline std::size_t optimal_lift_size(const sround::LiftContext& ctx) {
    const std::vector<Edge> rest = uncovered_edges(ctx);
    std::vector<bool> touched(ctx.graph().num_vertices());
    for (const Edge& e : rest) touched[e.u] = touched[e.v] = true;
    std::vector<vertex_t> pool;
    for (std::size_t v = 0; v < touched.size(); ++v) {
        if (touched[v]) pool.push_back(static_cast<vertex_t>(v));
    }
    return min_cover_size(ctx.graph().num_vertices(), rest, pool);
}

/// Maximum matching size by exhaustive branching on the edge list.
inline std::size_t max_matching_size(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<bool> used(n);
    std::function<std::size_t(std::size_t)> go = [&](std::size_t i) -> std::size_t {
        if (i == edges.size()) return 0;
        std::size_t best = go(i + 1);
        const Edge& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            best = std::max(best, 1 + go(i + 1));
            used[e.u] = used[e.v] = false;
        }
        return best;
    };
    return go(0);
}

/// Edges of g with both endpoints in keep, in parent ids, sorted.
inline std::vector<Edge> filter_edges(const Graph& g, const VertexSet& keep) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (keep.contains(e.u) && keep.contains(e.v)) out.push_back(e);
    }
    return out;
}

inline bool independent(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges()) {
        if (s.contains(e.u) && s.contains(e.v)) return false;
    }
    return true;
}

// ---- random instances ----

inline Graph random_graph(std::size_t n, double p, sround::Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.uniform01() < p) edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
        }
    }
    return Graph::from_edges(n, edges);
}

struct Bipartite {
    Graph graph;
    VertexSet left;
    VertexSet right;
};

inline Bipartite random_bipartite(std::size_t n, double p, sround::Rng& rng) {
    std::vector<bool> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = rng.below(2) == 1;
    std::vector<Edge> edges;
    VertexSet left(n), right(n);
    for (std::size_t u = 0; u < n; ++u) {
        (side[u] ? left : right).insert(static_cast<vertex_t>(u));
        for (std::size_t v = u + 1; v < n; ++v) {
            if (side[u] != side[v] && rng.uniform01() < p) {
                edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
            }
        }
    }
    return {Graph::from_edges(n, edges), std::move(left), std::move(right)};
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>((i + 1) % n)});
    }
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1)});
    return Graph::from_edges(n, edges);
}

/// Center 0 with leaves 1..k.
inline Graph star(std::size_t k) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k; ++i) edges.push_back({0, static_cast<vertex_t>(i)});
    return Graph::from_edges(k + 1, edges);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(a + j)});
    }
    return Graph::from_edges(a + b, edges);
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (vertex_t i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<vertex_t>((i + 1) % 5)});
        edges.push_back({i, static_cast<vertex_t>(i + 5)});
        edges.push_back({static_cast<vertex_t>(i + 5), static_cast<vertex_t>((i + 2) % 5 + 5)});
    }
    return Graph::from_edges(10, edges);
}

/// Random lifting context: a random edit set X and a cover S' of G − X that
/// is the complement (within V \ X) of a random maximal independent set.
inline sround::LiftContext random_context(const Graph& g, double x_prob, sround::Rng& rng) {
    const std::size_t n = g.num_vertices();
    VertexSet x(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (rng.uniform01() < x_prob) x.insert(static_cast<vertex_t>(v));
    }
    std::vector<vertex_t> order;
    for (std::size_t v = 0; v < n; ++v) {
        if (!x.contains(static_cast<vertex_t>(v))) order.push_back(static_cast<vertex_t>(v));
    }
    rng.shuffle(std::span<vertex_t>(order));
    std::vector<bool> blocked(n);
    VertexSet solution(n);
    for (vertex_t v : order) {
        if (blocked[v]) {
            solution.insert(v);
            continue;
        }
        for (vertex_t w : g.neighbors(v)) blocked[w] = true;
    }
    return sround::LiftContext(g, std::move(x), std::move(solution));
}

} // namespace oracle
