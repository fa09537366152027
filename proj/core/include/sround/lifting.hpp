#pragma once

#include "sround/graph.hpp"
#include "sround/oct.hpp"
#include "sround/vc_approx.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace sround {

/// Inputs shared by every lifting strategy: the edit set X removed from G,
/// a cover S' of G − X, and the non-selected vertices I = V(G) \ (X ∪ S').
///
/// Invariants (checked by the constructors, contract_error on failure):
///   X ∩ S' = ∅, X ∪ S' ∪ I = V(G) as a partition, and I is independent in G.
class LiftContext {
public:
    LiftContext(const Graph& g, VertexSet edit_set, VertexSet edited_solution);
    LiftContext(const Graph& g, VertexSet edit_set, VertexSet edited_solution, VertexSet non_selected);

    const Graph& graph() const noexcept { return *graph_; }
    const VertexSet& edit_set() const noexcept { return edit_set_; }
    const VertexSet& edited_solution() const noexcept { return edited_solution_; }
    const VertexSet& non_selected() const noexcept { return non_selected_; }

private:
    void validate() const;

    const Graph* graph_;
    VertexSet edit_set_;
    VertexSet edited_solution_;
    VertexSet non_selected_;
};

enum class LiftStrategy { Naive, Greedy, Apx, OctFirst, BipFirst, Recursive, RecursiveOct, RecursiveBip };

std::string_view to_string(LiftStrategy s) noexcept;
std::optional<LiftStrategy> parse_lift_strategy(std::string_view name) noexcept;

struct LiftOutcome {
    VertexSet lift;
    LiftStrategy strategy = LiftStrategy::Naive;
    std::optional<std::size_t> l1_size; ///< exact (bipartite) phase
    std::optional<std::size_t> l2_size; ///< 2-approximation phase
    std::optional<double> p;            ///< l1 / (l1 + l2), 1 when both are empty
    std::optional<double> factor_bound; ///< empty means no bound
    std::optional<std::size_t> lower_bound; ///< |L*| >= l2/2 + l1 (oct-first)
};

/// Which side plays "left" in an exact bipartite phase. König returns the
/// whole left side when the matching is perfect, so this fixes the
/// tie-break between equally small covers.
enum class ExactSide { EditSet, NonSelected };

enum class RecursiveMode {
    Full,    ///< structural rounding on G[I ∪ X]
    OctSide, ///< structural rounding on G[X], then exact on X-remainder–I
    BipSide, ///< exact on X–I, then structural rounding on the rest of G[X]
};

LiftOutcome lift_naive(const LiftContext& ctx);

/// Visits X in ascending id order, or shuffled when `order_seed` is set.
LiftOutcome lift_greedy(const LiftContext& ctx, std::optional<std::uint64_t> order_seed = std::nullopt);

LiftOutcome lift_apx(const LiftContext& ctx, EdgeSelectionRule rule = EdgeSelectionRule::HighDegree,
                     std::uint64_t seed = 0);

LiftOutcome lift_oct_first(const LiftContext& ctx, EdgeSelectionRule rule = EdgeSelectionRule::HighDegree,
                           std::uint64_t seed = 0, ExactSide left_side = ExactSide::EditSet);

LiftOutcome lift_bip_first(const LiftContext& ctx, EdgeSelectionRule rule = EdgeSelectionRule::HighDegree,
                           std::uint64_t seed = 0, ExactSide left_side = ExactSide::EditSet);

/// One level of structural rounding as the lift. Each inner round finds a
/// decomposition with `oct_rule`, solves its bipartite part exactly and adds
/// the inner OCT set. With depth > 1 the inner OCT set is itself lifted by
/// a full recursive round of depth − 1 instead of being added whole.
LiftOutcome lift_recursive(const LiftContext& ctx, RecursiveMode mode, MisRule oct_rule = MisRule::Resort,
                           std::uint64_t seed = 0, unsigned depth = 1);

/// p = l1 / (l1 + l2), and 1 when both are 0.
double lift_proportion(std::size_t l1, std::size_t l2) noexcept;

struct LiftParams {
    EdgeSelectionRule two_approx = EdgeSelectionRule::HighDegree;
    MisRule oct_rule = MisRule::Resort;
    std::uint64_t seed = 0;
};

LiftOutcome run_lift(LiftStrategy strategy, const LiftContext& ctx, const LiftParams& params = {});

/// Structural rounding cover of a whole graph: `mis_oct`, exact bipartite
/// solve, naïve lift. Used by the recursive lifts.
VertexSet structural_rounding_cover(const Graph& g, MisRule oct_rule, std::uint64_t seed, unsigned depth = 1);

} // namespace sround
