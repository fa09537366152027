#include "sround/lifting.hpp"

#include "sround/bipartite.hpp"
#include "sround/errors.hpp"
#include "sround/rng.hpp"

#include <algorithm>

namespace sround {

LiftContext::LiftContext(const Graph& g, VertexSet edit_set, VertexSet edited_solution)
    : graph_(&g), edit_set_(std::move(edit_set)), edited_solution_(std::move(edited_solution)) {
    if (edit_set_.universe() != g.num_vertices() || edited_solution_.universe() != g.num_vertices()) {
        throw contract_error("lift context sets do not match graph size");
    }
    if (!disjoint(edit_set_, edited_solution_)) throw contract_error("edit set and edited solution overlap");
    non_selected_ = set_union(edit_set_, edited_solution_).complement();
    validate();
}

LiftContext::LiftContext(const Graph& g, VertexSet edit_set, VertexSet edited_solution, VertexSet non_selected)
    : graph_(&g), edit_set_(std::move(edit_set)), edited_solution_(std::move(edited_solution)),
      non_selected_(std::move(non_selected)) {
    validate();
}

void LiftContext::validate() const {
    const std::size_t n = graph_->num_vertices();
    if (edit_set_.universe() != n || edited_solution_.universe() != n || non_selected_.universe() != n) {
        throw contract_error("lift context sets do not match graph size");
    }
    if (edit_set_.size() + edited_solution_.size() + non_selected_.size() != n ||
        !disjoint(edit_set_, edited_solution_) || !disjoint(edit_set_, non_selected_) ||
        !disjoint(edited_solution_, non_selected_)) {
        throw contract_error("edit set, edited solution and non-selected set must partition the vertices");
    }
    for (vertex_t u : non_selected_.members()) {
        for (vertex_t v : graph_->neighbors(u)) {
            if (non_selected_.contains(v)) {
                throw contract_error("edited solution misses edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ") of the edited graph");
            }
        }
    }
}

std::string_view to_string(LiftStrategy s) noexcept {
    switch (s) {
    case LiftStrategy::Naive: return "naive";
    case LiftStrategy::Greedy: return "greedy";
    case LiftStrategy::Apx: return "apx";
    case LiftStrategy::OctFirst: return "oct-first";
    case LiftStrategy::BipFirst: return "bip-first";
    case LiftStrategy::Recursive: return "recursive";
    case LiftStrategy::RecursiveOct: return "recursive-oct";
    case LiftStrategy::RecursiveBip: return "recursive-bip";
    }
    return "?";
}

std::optional<LiftStrategy> parse_lift_strategy(std::string_view name) noexcept {
    for (auto s : {LiftStrategy::Naive, LiftStrategy::Greedy, LiftStrategy::Apx, LiftStrategy::OctFirst,
                   LiftStrategy::BipFirst, LiftStrategy::Recursive, LiftStrategy::RecursiveOct,
                   LiftStrategy::RecursiveBip}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

namespace {

LiftOutcome finish(const LiftContext& ctx, LiftOutcome out) {
    for (vertex_t v : out.lift.members()) {
        if (ctx.edited_solution().contains(v)) {
            throw invariant_error(std::string(to_string(out.strategy)) + " lift contains a vertex of S'");
        }
    }
    if (!is_vertex_cover(ctx.graph(), set_union(out.lift, ctx.edited_solution()))) {
        throw invariant_error(std::string(to_string(out.strategy)) + " lift does not complete a vertex cover");
    }
    return out;
}

struct ExactPhase {
    VertexSet cover;
    std::size_t matching_size = 0;
};

// Exact minimum cover of a bipartite subgraph given as a view, with `left`
// and `right` in parent ids. Result is in parent ids.
ExactPhase solve_exact(const SubgraphView& view, const VertexSet& left, const VertexSet& right,
                       std::uint64_t seed) {
    const CoverResult r = min_vc_bipartite(view.graph(), view.to_local(left), view.to_local(right), seed);
    return {view.to_parent(r.cover), r.matched_edges.size()};
}

// 2-approximation over g[keep], result in parent ids.
CoverResult approx_on(const Graph& g, const VertexSet& keep, EdgeSelectionRule rule, std::uint64_t seed) {
    const SubgraphView view = induced_subgraph(g, keep);
    CoverResult r = standard_two_approx(view.graph(), rule, seed);
    for (Edge& e : r.matched_edges) e = {view.to_parent(e.u), view.to_parent(e.v)};
    r.cover = view.to_parent(r.cover);
    return r;
}

} // namespace

double lift_proportion(std::size_t l1, std::size_t l2) noexcept {
    return l1 + l2 == 0 ? 1.0 : static_cast<double>(l1) / static_cast<double>(l1 + l2);
}

LiftOutcome lift_naive(const LiftContext& ctx) {
    LiftOutcome out;
    out.strategy = LiftStrategy::Naive;
    out.lift = ctx.edit_set();
    return finish(ctx, std::move(out));
}

LiftOutcome lift_greedy(const LiftContext& ctx, std::optional<std::uint64_t> order_seed) {
    const Graph& g = ctx.graph();
    std::vector<vertex_t> order = ctx.edit_set().sorted();
    if (order_seed) {
        Rng rng(*order_seed);
        rng.shuffle(std::span<vertex_t>(order));
    }
    // U: vertices known to be outside the cover
    std::vector<std::uint8_t> outside(g.num_vertices(), 0);
    for (vertex_t v : ctx.non_selected().members()) outside[v] = 1;

    LiftOutcome out;
    out.strategy = LiftStrategy::Greedy;
    out.lift = VertexSet(g.num_vertices());
    for (vertex_t v : order) {
        const auto nbrs = g.neighbors(v);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](vertex_t w) { return outside[w] != 0; })) {
            out.lift.insert(v);
        } else {
            outside[v] = 1;
        }
    }
    return finish(ctx, std::move(out));
}

LiftOutcome lift_apx(const LiftContext& ctx, EdgeSelectionRule rule, std::uint64_t seed) {
    LiftOutcome out;
    out.strategy = LiftStrategy::Apx;
    out.lift = approx_on(ctx.graph(), set_union(ctx.non_selected(), ctx.edit_set()), rule, seed).cover;
    out.factor_bound = 2.0;
    return finish(ctx, std::move(out));
}

LiftOutcome lift_oct_first(const LiftContext& ctx, EdgeSelectionRule rule, std::uint64_t seed,
                           ExactSide left_side) {
    const Graph& g = ctx.graph();
    const CoverResult approx = approx_on(g, ctx.edit_set(), rule, derive_seed(seed, 1));
    const VertexSet& l2 = approx.cover;
    const VertexSet x_rest = set_difference(ctx.edit_set(), l2);

    // The branched edges lie inside L₂, so they share no vertex with G[X' ∪ I].
    for (const Edge& e : approx.matched_edges) {
        if (x_rest.contains(e.u) || x_rest.contains(e.v) || ctx.non_selected().contains(e.u) ||
            ctx.non_selected().contains(e.v)) {
            throw invariant_error("oct-first: branched edge touches the bipartite remainder");
        }
    }

    // X' is independent because L₂ covers G[X]; an edge inside a part makes
    // hopcroft_karp throw structure_error.
    const SubgraphView view = induced_subgraph(g, set_union(x_rest, ctx.non_selected()));
    const bool x_left = left_side == ExactSide::EditSet;
    const ExactPhase exact = solve_exact(view, x_left ? x_rest : ctx.non_selected(),
                                         x_left ? ctx.non_selected() : x_rest, derive_seed(seed, 2));

    LiftOutcome out;
    out.strategy = LiftStrategy::OctFirst;
    out.lift = set_union(exact.cover, l2);
    out.l1_size = exact.cover.size();
    out.l2_size = l2.size();
    out.p = lift_proportion(*out.l1_size, *out.l2_size);
    out.factor_bound = 2.0 / (1.0 + *out.p);
    out.lower_bound = approx.matched_edges.size() + exact.cover.size();
    return finish(ctx, std::move(out));
}

LiftOutcome lift_bip_first(const LiftContext& ctx, EdgeSelectionRule rule, std::uint64_t seed,
                           ExactSide left_side) {
    const Graph& g = ctx.graph();
    const SubgraphView cross = cross_subgraph(g, ctx.edit_set(), ctx.non_selected());
    const bool x_left = left_side == ExactSide::EditSet;
    const ExactPhase exact = solve_exact(cross, x_left ? ctx.edit_set() : ctx.non_selected(),
                                         x_left ? ctx.non_selected() : ctx.edit_set(), derive_seed(seed, 1));
    // Every X–I edge is now covered; what remains is G[X \ L₁].
    const VertexSet x_rest = set_difference(ctx.edit_set(), exact.cover);
    const CoverResult approx = approx_on(g, x_rest, rule, derive_seed(seed, 2));

    LiftOutcome out;
    out.strategy = LiftStrategy::BipFirst;
    out.lift = set_union(exact.cover, approx.cover);
    out.l1_size = exact.cover.size();
    out.l2_size = approx.cover.size();
    out.p = lift_proportion(*out.l1_size, *out.l2_size);
    if (*out.p > 0.0) out.factor_bound = 1.0 / *out.p;
    return finish(ctx, std::move(out));
}

VertexSet structural_rounding_cover(const Graph& g, MisRule oct_rule, std::uint64_t seed, unsigned depth) {
    const OctDecomposition d = mis_oct(g, oct_rule, derive_seed(seed, 1));
    const SubgraphView bip = induced_subgraph(g, set_union(d.left, d.right));
    const VertexSet solution = solve_exact(bip, d.left, d.right, derive_seed(seed, 2)).cover;
    if (depth <= 1) return set_union(solution, d.oct);
    const LiftContext inner(g, d.oct, solution);
    const LiftOutcome lifted = lift_recursive(inner, RecursiveMode::Full, oct_rule, derive_seed(seed, 3), depth - 1);
    return set_union(solution, lifted.lift);
}

namespace {

// Structural rounding on g[keep], result in parent ids.
VertexSet round_on(const Graph& g, const VertexSet& keep, MisRule rule, std::uint64_t seed, unsigned depth) {
    const SubgraphView view = induced_subgraph(g, keep);
    return view.to_parent(structural_rounding_cover(view.graph(), rule, seed, depth));
}

} // namespace

LiftOutcome lift_recursive(const LiftContext& ctx, RecursiveMode mode, MisRule oct_rule, std::uint64_t seed,
                           unsigned depth) {
    const Graph& g = ctx.graph();
    const VertexSet& x = ctx.edit_set();
    const VertexSet& i = ctx.non_selected();
    LiftOutcome out;
    switch (mode) {
    case RecursiveMode::Full:
        out.strategy = LiftStrategy::Recursive;
        out.lift = round_on(g, set_union(i, x), oct_rule, seed, depth);
        break;
    case RecursiveMode::OctSide: {
        out.strategy = LiftStrategy::RecursiveOct;
        const VertexSet on_x = round_on(g, x, oct_rule, derive_seed(seed, 1), depth);
        const VertexSet x_rest = set_difference(x, on_x);
        const SubgraphView view = induced_subgraph(g, set_union(x_rest, i));
        const ExactPhase exact = solve_exact(view, x_rest, i, derive_seed(seed, 2));
        out.lift = set_union(on_x, exact.cover);
        break;
    }
    case RecursiveMode::BipSide: {
        out.strategy = LiftStrategy::RecursiveBip;
        const SubgraphView cross = cross_subgraph(g, x, i);
        const ExactPhase exact = solve_exact(cross, x, i, derive_seed(seed, 1));
        const VertexSet x_rest = set_difference(x, exact.cover);
        out.lift = set_union(exact.cover, round_on(g, x_rest, oct_rule, derive_seed(seed, 2), depth));
        break;
    }
    }
    return finish(ctx, std::move(out));
}

LiftOutcome run_lift(LiftStrategy strategy, const LiftContext& ctx, const LiftParams& params) {
    switch (strategy) {
    case LiftStrategy::Naive: return lift_naive(ctx);
    case LiftStrategy::Greedy: return lift_greedy(ctx);
    case LiftStrategy::Apx: return lift_apx(ctx, params.two_approx, params.seed);
    case LiftStrategy::OctFirst: return lift_oct_first(ctx, params.two_approx, params.seed);
    case LiftStrategy::BipFirst: return lift_bip_first(ctx, params.two_approx, params.seed);
    case LiftStrategy::Recursive: return lift_recursive(ctx, RecursiveMode::Full, params.oct_rule, params.seed);
    case LiftStrategy::RecursiveOct:
        return lift_recursive(ctx, RecursiveMode::OctSide, params.oct_rule, params.seed);
    case LiftStrategy::RecursiveBip:
        return lift_recursive(ctx, RecursiveMode::BipSide, params.oct_rule, params.seed);
    }
    throw argument_error("unknown lift strategy");
}

} // namespace sround
