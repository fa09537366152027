#include "sround/oct.hpp"

#include "sround/errors.hpp"
#include "sround/rng.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace sround {

void OctDecomposition::normalize() {
    if (left.size() < right.size()) std::swap(left, right);
}

void validate_decomposition(const Graph& g, const OctDecomposition& d) {
    const std::size_t n = g.num_vertices();
    if (d.oct.universe() != n || d.left.universe() != n || d.right.universe() != n) {
        throw structure_error("decomposition universe does not match graph size " + std::to_string(n));
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto id = static_cast<vertex_t>(v);
        const int hits = int{d.oct.contains(id)} + int{d.left.contains(id)} + int{d.right.contains(id)};
        if (hits != 1) {
            throw structure_error("vertex " + std::to_string(v) + " appears in " + std::to_string(hits) +
                                  " parts of the decomposition");
        }
    }
    if (!is_bipartite_with_parts(g, d.left, d.right)) {
        throw structure_error("decomposition parts are not independent sets");
    }
}

std::string_view to_string(MisRule rule) noexcept {
    switch (rule) {
    case MisRule::Resort: return "resort";
    case MisRule::NoResort: return "no-resort";
    case MisRule::Random: return "random";
    }
    return "?";
}

std::optional<MisRule> parse_mis_rule(std::string_view name) noexcept {
    if (name == "resort") return MisRule::Resort;
    if (name == "no-resort") return MisRule::NoResort;
    if (name == "random") return MisRule::Random;
    return std::nullopt;
}

VertexSet maximal_independent_set(const Graph& g, const VertexSet& active, MisRule rule, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    if (active.universe() != n) throw argument_error("active set universe does not match graph");
    // available: still in the residual graph (active, not chosen, not adjacent to a chosen vertex)
    std::vector<std::uint8_t> available(n, 0);
    for (vertex_t v : active.members()) available[v] = 1;
    std::vector<std::size_t> degree(n, 0);
    for (vertex_t v : active.members()) {
        for (vertex_t w : g.neighbors(v)) degree[v] += available[w];
    }

    VertexSet mis(n);
    if (rule == MisRule::Resort) {
        using Entry = std::pair<std::size_t, vertex_t>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (vertex_t v : active.members()) heap.push({degree[v], v});
        while (!heap.empty()) {
            const auto [d, v] = heap.top();
            heap.pop();
            if (!available[v] || d != degree[v]) continue; // stale
            mis.insert(v);
            available[v] = 0;
            for (vertex_t w : g.neighbors(v)) {
                if (!available[w]) continue;
                available[w] = 0;
                for (vertex_t x : g.neighbors(w)) {
                    if (available[x]) heap.push({--degree[x], x});
                }
            }
        }
        return mis;
    }

    std::vector<vertex_t> order = active.sorted();
    if (rule == MisRule::NoResort) {
        std::stable_sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) { return degree[a] < degree[b]; });
    } else {
        Rng rng(seed);
        rng.shuffle(std::span<vertex_t>(order));
    }
    for (vertex_t v : order) {
        if (!available[v]) continue;
        mis.insert(v);
        available[v] = 0;
        for (vertex_t w : g.neighbors(v)) available[w] = 0;
    }
    return mis;
}

OctDecomposition mis_oct(const Graph& g, MisRule rule, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    VertexSet first = maximal_independent_set(g, VertexSet::all(n), rule, derive_seed(seed, 1));
    VertexSet second = maximal_independent_set(g, first.complement(), rule, derive_seed(seed, 2));
    OctDecomposition d{set_union(first, second).complement(), std::move(first), std::move(second)};
    d.normalize();
    return d;
}

OctDecomposition bfs_oct(const Graph& g, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    Rng rng(seed);
    enum : std::uint8_t { unplaced = 0, in_left, in_right, in_oct };
    std::vector<std::uint8_t> side(n, unplaced);
    std::vector<std::uint8_t> queued(n, 0);

    std::vector<vertex_t> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    rng.shuffle(std::span<vertex_t>(starts));

    std::queue<vertex_t> frontier;
    std::vector<vertex_t> nbrs;
    for (vertex_t s : starts) {
        if (queued[s]) continue;
        queued[s] = 1;
        frontier.push(s);
        while (!frontier.empty()) {
            const vertex_t v = frontier.front();
            frontier.pop();
            bool left_conflict = false;
            bool right_conflict = false;
            for (vertex_t w : g.neighbors(v)) {
                left_conflict |= side[w] == in_left;
                right_conflict |= side[w] == in_right;
            }
            side[v] = !left_conflict ? in_left : !right_conflict ? in_right : in_oct;

            const auto row = g.neighbors(v);
            nbrs.assign(row.begin(), row.end());
            rng.shuffle(std::span<vertex_t>(nbrs));
            for (vertex_t w : nbrs) {
                if (queued[w]) continue;
                queued[w] = 1;
                frontier.push(w);
            }
        }
    }

    OctDecomposition d{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (std::size_t v = 0; v < n; ++v) {
        const auto id = static_cast<vertex_t>(v);
        switch (side[v]) {
        case in_left: d.left.insert(id); break;
        case in_right: d.right.insert(id); break;
        default: d.oct.insert(id); break;
        }
    }
    d.normalize();
    return d;
}

void write_decomposition(std::ostream& out, const OctDecomposition& d) {
    auto line = [&](const char* key, const VertexSet& s) {
        out << key << ':';
        for (vertex_t v : s.sorted()) out << ' ' << v;
        out << '\n';
    };
    line("oct", d.oct);
    line("left", d.left);
    line("right", d.right);
}

OctDecomposition parse_decomposition(std::string_view text, std::size_t n) {
    OctDecomposition d{VertexSet(n), VertexSet(n), VertexSet(n)};
    bool seen[3] = {false, false, false};
    std::vector<std::uint8_t> used(n, 0);
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw parse_error("expected '<part>: ids'", line_no);
        const std::string_view key = line.substr(0, colon);
        int index = key == "oct" ? 0 : key == "left" ? 1 : key == "right" ? 2 : -1;
        if (index < 0) throw parse_error("unknown part '" + std::string(key) + "'", line_no);
        if (seen[index]) throw parse_error("part '" + std::string(key) + "' listed twice", line_no);
        seen[index] = true;
        VertexSet& target = index == 0 ? d.oct : index == 1 ? d.left : d.right;

        std::string_view rest = line.substr(colon + 1);
        while (!rest.empty()) {
            while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            if (rest.empty()) break;
            const std::size_t end = std::min(rest.find(' '), rest.size());
            const std::string_view tok = rest.substr(0, end);
            rest.remove_prefix(end);
            std::uint64_t id = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw parse_error("bad vertex id '" + std::string(tok) + "'", line_no);
            }
            if (id >= n) throw range_error("line " + std::to_string(line_no) + ": vertex " + std::to_string(id) +
                                           " outside graph of size " + std::to_string(n));
            if (used[id]++) throw structure_error("vertex " + std::to_string(id) + " listed more than once");
            target.insert(static_cast<vertex_t>(id));
        }
    }
    if (!(seen[0] && seen[1] && seen[2])) throw parse_error("decomposition needs oct, left and right lines", 0);
    const std::size_t total = d.oct.size() + d.left.size() + d.right.size();
    if (total != n) {
        throw structure_error("decomposition lists " + std::to_string(total) + " of " + std::to_string(n) +
                              " vertices");
    }
    return d;
}

OctDecomposition load_decomposition(const std::string& path, std::size_t n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_decomposition(buf.str(), n);
}

} // namespace sround
