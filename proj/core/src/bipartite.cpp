#include "sround/bipartite.hpp"

#include "sround/errors.hpp"
#include "sround/rng.hpp"
#include "sround/stopwatch.hpp"

#include <algorithm>
#include <limits>

namespace sround {

std::vector<Edge> Matching::edges(const VertexSet& left) const {
    std::vector<Edge> out;
    out.reserve(size);
    for (vertex_t u : left.sorted()) {
        if (mate[u] != no_vertex) out.push_back({u, mate[u]});
    }
    return out;
}

namespace {

void require_bipartition(const Graph& g, const VertexSet& left, const VertexSet& right) {
    const std::size_t n = g.num_vertices();
    if (left.universe() != n || right.universe() != n) {
        throw argument_error("bipartition universe does not match graph size " + std::to_string(n));
    }
    if (!disjoint(left, right)) throw structure_error("bipartition parts overlap");
    const auto nv = static_cast<vertex_t>(n);
    for (vertex_t u = 0; u < nv; ++u) {
        for (vertex_t v : g.neighbors(u)) {
            if (u > v) continue;
            const bool crosses = (left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u));
            if (!crosses) {
                throw structure_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") does not join the two parts");
            }
        }
    }
}

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

} // namespace

Matching hopcroft_karp(const Graph& g, const VertexSet& left, const VertexSet& right, std::uint64_t seed) {
    require_bipartition(g, left, right);
    const std::size_t n = g.num_vertices();
    Matching m{std::vector<vertex_t>(n, no_vertex), 0};

    std::vector<vertex_t> order(left.members().begin(), left.members().end());
    std::sort(order.begin(), order.end());
    Rng rng(seed);
    rng.shuffle(std::span<vertex_t>(order));

    std::vector<std::size_t> layer(n, unreached);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<vertex_t> queue;
    queue.reserve(order.size());
    std::vector<vertex_t> path_left;
    std::vector<vertex_t> path_right;

    for (;;) {
        // Layer the left vertices by alternating distance from the free ones.
        queue.clear();
        for (vertex_t u : order) {
            if (m.mate[u] == no_vertex) {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = unreached;
            }
        }
        std::size_t free_layer = unreached;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const vertex_t u = queue[head];
            if (layer[u] >= free_layer) break;
            for (vertex_t v : g.neighbors(u)) {
                const vertex_t w = m.mate[v];
                if (w == no_vertex) {
                    free_layer = std::min(free_layer, layer[u] + 1);
                } else if (layer[w] == unreached) {
                    layer[w] = layer[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (free_layer == unreached) break;

        // Vertex-disjoint shortest augmenting paths, iterative DFS.
        for (vertex_t u : order) cursor[u] = 0;
        for (vertex_t root : order) {
            if (m.mate[root] != no_vertex) continue;
            path_left.assign(1, root);
            path_right.clear();
            while (!path_left.empty()) {
                const vertex_t u = path_left.back();
                const auto nbrs = g.neighbors(u);
                if (cursor[u] == nbrs.size()) {
                    layer[u] = unreached; // dead end for the rest of the phase
                    path_left.pop_back();
                    if (!path_right.empty()) path_right.pop_back();
                    continue;
                }
                const vertex_t v = nbrs[cursor[u]++];
                const vertex_t w = m.mate[v];
                if (w == no_vertex) {
                    if (layer[u] + 1 != free_layer) continue;
                    path_right.push_back(v);
                    for (std::size_t k = 0; k < path_left.size(); ++k) {
                        m.mate[path_left[k]] = path_right[k];
                        m.mate[path_right[k]] = path_left[k];
                    }
                    ++m.size;
                    for (vertex_t x : path_left) layer[x] = unreached;
                    break;
                }
                if (layer[w] != unreached && layer[w] == layer[u] + 1) {
                    path_left.push_back(w);
                    path_right.push_back(v);
                }
            }
        }
    }
    return m;
}

VertexSet koenig_cover(const Graph& g, const VertexSet& left, const VertexSet& right, const Matching& matching) {
    const std::size_t n = g.num_vertices();
    if (matching.mate.size() != n) throw contract_error("matching size does not match graph");
    std::vector<std::uint8_t> reached(n, 0);
    std::vector<vertex_t> queue;
    for (vertex_t u : left.sorted()) {
        if (matching.mate[u] == no_vertex) {
            reached[u] = 1;
            queue.push_back(u);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex_t u = queue[head];
        for (vertex_t v : g.neighbors(u)) {
            if (v == matching.mate[u] || reached[v]) continue;
            reached[v] = 1;
            const vertex_t w = matching.mate[v];
            if (w == no_vertex) {
                throw contract_error("matching is not maximum: augmenting path ends at vertex " + std::to_string(v));
            }
            if (!reached[w]) {
                reached[w] = 1;
                queue.push_back(w);
            }
        }
    }

    VertexSet cover(n);
    for (vertex_t u : left.sorted()) {
        if (!reached[u]) cover.insert(u);
    }
    for (vertex_t v : right.sorted()) {
        if (reached[v]) cover.insert(v);
    }
    if (cover.size() != matching.size) {
        throw contract_error("König cover has " + std::to_string(cover.size()) + " vertices but matching has " +
                             std::to_string(matching.size) + " edges");
    }
    return cover;
}

CoverResult min_vc_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right, std::uint64_t seed) {
    const Stopwatch timer;
    const Matching m = hopcroft_karp(g, left, right, seed);
    CoverResult result{koenig_cover(g, left, right, m), m.edges(left), 0.0};
    result.elapsed = timer.seconds();
    return result;
}

} // namespace sround
