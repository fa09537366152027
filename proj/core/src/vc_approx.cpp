#include "sround/vc_approx.hpp"

#include "sround/rng.hpp"
#include "sround/stopwatch.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sround {

std::string_view to_string(EdgeSelectionRule rule) noexcept {
    switch (rule) {
    case EdgeSelectionRule::HighDegree: return "std-high";
    case EdgeSelectionRule::LowDegree: return "std-low";
    case EdgeSelectionRule::Random: return "std-rand";
    }
    return "?";
}

std::optional<EdgeSelectionRule> parse_edge_selection_rule(std::string_view name) noexcept {
    if (name == "std-high") return EdgeSelectionRule::HighDegree;
    if (name == "std-low") return EdgeSelectionRule::LowDegree;
    if (name == "std-rand") return EdgeSelectionRule::Random;
    return std::nullopt;
}

namespace {

// Vertices bucketed by residual degree. Degrees only ever decrease.
class DegreeBuckets {
public:
    explicit DegreeBuckets(const Graph& g) : degree_(g.num_vertices()), slot_(g.num_vertices()) {
        std::size_t max_degree = 0;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            degree_[v] = g.degree(static_cast<vertex_t>(v));
            max_degree = std::max(max_degree, degree_[v]);
        }
        buckets_.resize(max_degree + 1);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) place(static_cast<vertex_t>(v));
        high_ = max_degree;
    }

    std::size_t degree(vertex_t v) const { return degree_[v]; }

    void remove(vertex_t v) {
        auto& bucket = buckets_[degree_[v]];
        const vertex_t moved = bucket.back();
        bucket[slot_[v]] = moved;
        slot_[moved] = slot_[v];
        bucket.pop_back();
    }

    void decrement(vertex_t v) {
        remove(v);
        --degree_[v];
        place(v);
        if (degree_[v] > 0) low_ = std::min(low_, degree_[v]);
    }

    /// Random vertex of maximum positive degree, or no_vertex.
    vertex_t pick_high(Rng& rng) {
        while (high_ > 0 && buckets_[high_].empty()) --high_;
        if (high_ == 0) return no_vertex;
        const auto& b = buckets_[high_];
        return b[rng.below(b.size())];
    }

    /// Random vertex of minimum positive degree, or no_vertex.
    vertex_t pick_low(Rng& rng) {
        while (high_ > 0 && buckets_[high_].empty()) --high_;
        low_ = std::max<std::size_t>(low_, 1);
        while (low_ <= high_ && buckets_[low_].empty()) ++low_;
        if (low_ > high_) return no_vertex;
        const auto& b = buckets_[low_];
        return b[rng.below(b.size())];
    }

private:
    void place(vertex_t v) {
        auto& bucket = buckets_[degree_[v]];
        slot_[v] = bucket.size();
        bucket.push_back(v);
    }

    std::vector<std::size_t> degree_;
    std::vector<std::size_t> slot_;
    std::vector<std::vector<vertex_t>> buckets_;
    std::size_t high_ = 0;
    std::size_t low_ = 1;
};

} // namespace

CoverResult standard_two_approx(const Graph& g, EdgeSelectionRule rule, std::uint64_t seed) {
    const Stopwatch timer;
    const std::size_t n = g.num_vertices();
    Rng rng(seed);
    CoverResult result{VertexSet(n), {}, 0.0};

    if (rule == EdgeSelectionRule::Random) {
        // The first live edge of a uniform permutation is uniform over the
        // live edges, so one shuffle replaces repeated sampling.
        std::vector<Edge> order = g.edges();
        rng.shuffle(std::span<Edge>(order));
        for (const Edge& e : order) {
            if (result.cover.contains(e.u) || result.cover.contains(e.v)) continue;
            result.cover.insert(e.u);
            result.cover.insert(e.v);
            result.matched_edges.push_back(e);
        }
        result.elapsed = timer.seconds();
        return result;
    }

    DegreeBuckets buckets(g);
    std::vector<std::uint8_t> alive(n, 1);
    std::vector<vertex_t> live_neighbors;
    auto kill = [&](vertex_t x) {
        alive[x] = 0;
        buckets.remove(x);
        for (vertex_t y : g.neighbors(x)) {
            if (alive[y]) buckets.decrement(y);
        }
    };

    for (;;) {
        const vertex_t u = rule == EdgeSelectionRule::HighDegree ? buckets.pick_high(rng) : buckets.pick_low(rng);
        if (u == no_vertex) break;
        live_neighbors.clear();
        for (vertex_t w : g.neighbors(u)) {
            if (alive[w]) live_neighbors.push_back(w);
        }
        const vertex_t v = live_neighbors[rng.below(live_neighbors.size())];
        result.cover.insert(u);
        result.cover.insert(v);
        result.matched_edges.push_back({std::min(u, v), std::max(u, v)});
        kill(u);
        kill(v);
    }
    result.elapsed = timer.seconds();
    return result;
}

CoverResult dfs_two_approx(const Graph& g, std::uint64_t seed) {
    std::vector<vertex_t> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(std::span<vertex_t>(order));
    return dfs_two_approx(g, order);
}

CoverResult dfs_two_approx(const Graph& g, std::span<const vertex_t> root_order) {
    const Stopwatch timer;
    const std::size_t n = g.num_vertices();
    std::vector<vertex_t> parent(n, no_vertex);
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<std::uint8_t> internal(n, 0);
    std::vector<vertex_t> preorder;
    preorder.reserve(n);

    struct Frame {
        vertex_t v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto explore = [&](vertex_t root) {
        if (visited[root]) return;
        visited[root] = 1;
        preorder.push_back(root);
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto nbrs = g.neighbors(top.v);
            if (top.next == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            const vertex_t w = nbrs[top.next++];
            if (visited[w]) continue;
            visited[w] = 1;
            parent[w] = top.v;
            internal[top.v] = 1;
            preorder.push_back(w);
            stack.push_back({w, 0});
        }
    };
    for (vertex_t r : root_order) explore(r);
    for (std::size_t v = 0; v < n; ++v) explore(static_cast<vertex_t>(v));

    CoverResult result{VertexSet(n), {}, 0.0};
    for (vertex_t v : preorder) {
        if (internal[v]) result.cover.insert(v);
    }
    // Leaf-up greedy matching is a maximum matching of each tree, and a
    // maximum tree matching has at least half as many edges as internal nodes.
    std::vector<std::uint8_t> matched(n, 0);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        const vertex_t v = *it;
        const vertex_t p = parent[v];
        if (p == no_vertex || matched[v] || matched[p]) continue;
        matched[v] = matched[p] = 1;
        result.matched_edges.push_back({std::min(v, p), std::max(v, p)});
    }
    result.elapsed = timer.seconds();
    return result;
}

CoverResult max_degree_heuristic(const Graph& g) {
    const Stopwatch timer;
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> degree(n);
    std::vector<std::uint8_t> taken(n, 0);

    struct Entry {
        std::size_t degree;
        vertex_t v;
    };
    // top = highest degree, then smallest id
    auto worse = [](const Entry& a, const Entry& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.v > b.v;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = g.degree(static_cast<vertex_t>(v));
        if (degree[v] > 0) heap.push({degree[v], static_cast<vertex_t>(v)});
    }

    CoverResult result{VertexSet(n), {}, 0.0};
    while (!heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        if (taken[top.v] || top.degree != degree[top.v]) continue; // stale
        taken[top.v] = 1;
        result.cover.insert(top.v);
        for (vertex_t w : g.neighbors(top.v)) {
            if (taken[w]) continue;
            if (--degree[w] > 0) heap.push({degree[w], w});
        }
    }
    result.elapsed = timer.seconds();
    return result;
}

} // namespace sround
