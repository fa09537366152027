#include "sround/graph.hpp"

#include "sround/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace sround {

VertexSet VertexSet::from(std::size_t universe, std::span<const vertex_t> ids) {
    VertexSet s(universe);
    for (vertex_t v : ids) s.insert(v);
    return s;
}

VertexSet VertexSet::all(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<vertex_t>(v));
    return s;
}

bool VertexSet::insert(vertex_t v) {
    if (v < 0 || static_cast<std::size_t>(v) >= bits_.size()) {
        throw range_error("vertex " + std::to_string(v) + " outside universe of size " +
                          std::to_string(bits_.size()));
    }
    if (bits_[v]) return false;
    bits_[v] = 1;
    list_.push_back(v);
    return true;
}

std::vector<vertex_t> VertexSet::sorted() const {
    std::vector<vertex_t> out(list_);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe());
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (!bits_[v]) out.insert(static_cast<vertex_t>(v));
    }
    return out;
}

namespace {

void require_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe()) {
        throw argument_error("vertex sets over different universes (" + std::to_string(a.universe()) +
                             " vs " + std::to_string(b.universe()) + ")");
    }
}

} // namespace

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    VertexSet out = a;
    for (vertex_t v : b.members()) out.insert(v);
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    VertexSet out(a.universe());
    for (vertex_t v : a.members()) {
        if (b.contains(v)) out.insert(v);
    }
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    VertexSet out(a.universe());
    for (vertex_t v : a.members()) {
        if (!b.contains(v)) out.insert(v);
    }
    return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    require_same_universe(a, b);
    const VertexSet& small = a.size() <= b.size() ? a : b;
    const VertexSet& large = a.size() <= b.size() ? b : a;
    return std::none_of(small.members().begin(), small.members().end(),
                        [&](vertex_t v) { return large.contains(v); });
}

// ---------------------------------------------------------------------------

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
    if (n > static_cast<std::size_t>(std::numeric_limits<vertex_t>::max())) {
        throw range_error("vertex count " + std::to_string(n) + " exceeds id range");
    }
    BuildStats local;
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
            throw range_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") outside vertex range [0, " + std::to_string(n) + ")");
        }
        if (e.u == e.v) {
            ++local.self_loops;
            continue;
        }
        canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(canon.begin(), canon.end());
    const auto last = std::unique(canon.begin(), canon.end());
    local.duplicate_edges = static_cast<std::size_t>(canon.end() - last);
    canon.erase(last, canon.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : canon) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.resize(2 * canon.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // canon is sorted by (u, v): writing v into u's row and u into v's row
    // in this order leaves every row sorted.
    for (const Edge& e : canon) g.adjacency_[cursor[e.v]++] = e.u;
    for (const Edge& e : canon) g.adjacency_[cursor[e.u]++] = e.v;
    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= num_vertices() ||
        static_cast<std::size_t>(v) >= num_vertices()) {
        return false;
    }
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for_each_edge([&](vertex_t u, vertex_t v) { out.push_back({u, v}); });
    return out;
}

// ---------------------------------------------------------------------------

std::optional<vertex_t> SubgraphView::to_local(vertex_t parent) const {
    if (parent < 0 || static_cast<std::size_t>(parent) >= to_local_.size()) return std::nullopt;
    const vertex_t l = to_local_[parent];
    if (l == no_vertex) return std::nullopt;
    return l;
}

VertexSet SubgraphView::to_parent(const VertexSet& local) const {
    VertexSet out(parent_size());
    for (vertex_t v : local.members()) out.insert(to_parent_.at(v));
    return out;
}

VertexSet SubgraphView::to_local(const VertexSet& parent) const {
    VertexSet out(to_parent_.size());
    for (vertex_t v : parent.members()) {
        if (static_cast<std::size_t>(v) < to_local_.size() && to_local_[v] != no_vertex) {
            out.insert(to_local_[v]);
        }
    }
    return out;
}

namespace {

template <class KeepEdge>
void build_view(const Graph& g, const VertexSet& keep, KeepEdge keep_edge, Graph& local, VertexSet& kept,
                std::vector<vertex_t>& to_parent, std::vector<vertex_t>& to_local) {
    if (keep.universe() != g.num_vertices()) {
        throw range_error("vertex set universe " + std::to_string(keep.universe()) +
                          " does not match graph size " + std::to_string(g.num_vertices()));
    }
    to_parent = keep.sorted();
    to_local.assign(g.num_vertices(), no_vertex);
    for (std::size_t i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = static_cast<vertex_t>(i);
    std::vector<Edge> edges;
    for (vertex_t u : to_parent) {
        for (vertex_t v : g.neighbors(u)) {
            if (u < v && to_local[v] != no_vertex && keep_edge(u, v)) {
                edges.push_back({to_local[u], to_local[v]});
            }
        }
    }
    local = Graph::from_edges(to_parent.size(), edges);
    kept = keep;
}

} // namespace

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep) {
    SubgraphView view;
    build_view(g, keep, [](vertex_t, vertex_t) { return true; }, view.local_, view.kept_, view.to_parent_,
               view.to_local_);
    return view;
}

SubgraphView cross_subgraph(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!disjoint(a, b)) throw argument_error("cross_subgraph: sides overlap");
    SubgraphView view;
    build_view(g, set_union(a, b), [&](vertex_t u, vertex_t v) { return a.contains(u) != a.contains(v); },
               view.local_, view.kept_, view.to_parent_, view.to_local_);
    return view;
}

// ---------------------------------------------------------------------------

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    const auto n = static_cast<vertex_t>(g.num_vertices());
    for (vertex_t u = 0; u < n; ++u) {
        if (s.contains(u)) continue;
        for (vertex_t v : g.neighbors(u)) {
            if (!s.contains(v)) return false;
        }
    }
    return true;
}

bool is_bipartite_with_parts(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (!disjoint(left, right)) throw argument_error("bipartition parts overlap");
    for (const VertexSet* part : {&left, &right}) {
        for (vertex_t u : part->members()) {
            if (static_cast<std::size_t>(u) >= g.num_vertices()) continue;
            for (vertex_t v : g.neighbors(u)) {
                if (part->contains(v)) return false;
            }
        }
    }
    return true;
}

VertexSet brute_force_min_vc(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > brute_force_cap) {
        throw size_error("brute-force vertex cover limited to " + std::to_string(brute_force_cap) +
                         " vertices, got " + std::to_string(n));
    }
    std::vector<std::uint32_t> nbr(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (vertex_t w : g.neighbors(static_cast<vertex_t>(v))) nbr[v] |= std::uint32_t{1} << w;
    }
    const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::uint32_t best = full;
    int best_count = std::popcount(full);
    for (std::uint64_t m = 0; m <= full; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        const int count = std::popcount(mask);
        if (count >= best_count) continue;
        bool cover = true;
        // every vertex outside the mask must have all neighbors inside it
        for (std::uint32_t out = ~mask & full; out != 0 && cover; out &= out - 1) {
            if (nbr[std::countr_zero(out)] & ~mask) cover = false;
        }
        if (cover) {
            best = mask;
            best_count = count;
        }
    }
    VertexSet s(n);
    for (std::uint32_t b = best; b != 0; b &= b - 1) s.insert(std::countr_zero(b));
    return s;
}

// ---------------------------------------------------------------------------

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& line) {
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    const std::string_view tok = line.substr(i, j - i);
    line.remove_prefix(j);
    return tok;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw range_error("line " + std::to_string(line_no) + ": id '" + std::string(tok) + "' overflows");
    }
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw parse_error("expected non-negative integer, got '" + std::string(tok) + "'", line_no);
    }
    return value;
}

} // namespace

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
    constexpr auto id_max = static_cast<std::uint64_t>(std::numeric_limits<vertex_t>::max());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::optional<std::uint64_t> declared_n;
    std::uint64_t max_id = 0;
    bool any = false;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        std::string_view rest = line;
        const std::string_view first = next_token(rest);
        if (first.empty() || first.front() == '#' || first.front() == '%') continue;
        if (first == "n") {
            if (declared_n || any) throw parse_error("'n' header must appear once, before edges", line_no);
            const std::string_view count = next_token(rest);
            if (count.empty()) throw parse_error("'n' header missing count", line_no);
            declared_n = parse_id(count, line_no);
            if (*declared_n > id_max) throw range_error("line " + std::to_string(line_no) + ": n too large");
        } else {
            const std::string_view second = next_token(rest);
            if (second.empty()) throw parse_error("edge line needs two ids", line_no);
            const std::uint64_t u = parse_id(first, line_no);
            const std::uint64_t v = parse_id(second, line_no);
            if (!options.compact_ids && (u >= id_max || v >= id_max)) {
                throw range_error("line " + std::to_string(line_no) + ": id exceeds supported range");
            }
            raw.emplace_back(u, v);
            max_id = std::max({max_id, u, v});
            any = true;
        }
        if (!next_token(rest).empty()) throw parse_error("trailing tokens", line_no);
    }

    ParsedGraph out;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::size_t n = 0;
    if (options.compact_ids) {
        std::vector<std::uint64_t> ids;
        ids.reserve(2 * raw.size());
        for (auto [u, v] : raw) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.size() > id_max) throw range_error("too many distinct vertex ids");
        auto index = [&](std::uint64_t id) {
            return static_cast<vertex_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
        };
        for (auto [u, v] : raw) edges.push_back({index(u), index(v)});
        n = ids.size();
        if (declared_n) {
            if (*declared_n < n) throw range_error("declared n smaller than number of distinct ids");
            n = *declared_n;
        }
        out.original_ids = std::move(ids);
    } else {
        for (auto [u, v] : raw) edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
        n = any ? static_cast<std::size_t>(max_id) + 1 : 0;
        if (declared_n) {
            if (*declared_n < n) {
                throw range_error("declared n = " + std::to_string(*declared_n) + " but id " +
                                  std::to_string(max_id) + " appears");
            }
            n = *declared_n;
        }
    }
    out.graph = Graph::from_edges(n, edges, &out.stats);
    return out;
}

ParsedGraph load_edge_list(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str(), options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.num_vertices() << '\n';
    g.for_each_edge([&](vertex_t u, vertex_t v) { out << u << ' ' << v << '\n'; });
}

} // namespace sround
