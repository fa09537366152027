#pragma once

#include "sround/graph.hpp"
#include "sround/oct.hpp"

#include <cstdint>
#include <string>

namespace sround {

/// Knobs of the near-bipartite generator. Blocks: L–R (bipartite part),
/// O–B with B = L ∪ R, and O–O.
struct GeneratorParams {
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    std::size_t n_oct = 0;
    double d_lr = 0.0; ///< expected L–R edge density
    double d_ob = 0.0; ///< expected O–B edge density
    double d_oo = 0.0; ///< expected density inside O
    double cv_lr = 0.0; ///< cv of expected L-neighbor counts over R vertices
    double cv_ob = 0.0; ///< cv of expected B-neighbor counts over O vertices
    std::uint64_t seed = 0;

    /// Throws argument_error on n_left < n_right, densities outside [0, 1] or negative cv.
    void validate() const;
    std::size_t num_vertices() const noexcept { return n_left + n_right + n_oct; }
    double expected_edges() const noexcept;
};

struct GeneratedInstance {
    Graph graph;
    OctDecomposition prescribed;
    GeneratorParams params;
    /// Vertices whose weighted edge probability exceeded 1 and was clipped.
    std::size_t clipped_weights = 0;
};

struct PartSizes {
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    std::size_t n_oct = 0;
};

/// Chooses part sizes with n_left / n_right ≈ ratio_lr and n_oct / n ≈
/// oct_frac so that the expected edge count is within 1% of target_m.
PartSizes resolve_sizes(double ratio_lr, double oct_frac, double d_lr, double d_ob, double d_oo,
                        std::size_t target_m);

/// Expected edge count d_lr·nL·nR + d_ob·nO·(nL+nR) + d_oo·nO·(nO−1)/2.
double expected_edges(const PartSizes& sizes, double d_lr, double d_ob, double d_oo) noexcept;

/// Each L–R pair (u, v) is an edge with probability min(1, d_lr·w_v) where
/// w_v is a Gamma weight of mean 1 and the requested cv; likewise O–B pairs
/// with per-O weights, and O–O pairs with constant d_oo. Vertex labels are a
/// seeded random permutation, so part membership is not visible in the ids.
GeneratedInstance generate(const GeneratorParams& params);

struct EmpiricalStats {
    std::size_t m = 0;
    std::size_t m_lr = 0, m_ob = 0, m_oo = 0;
    std::size_t m_within_parts = 0; ///< edges inside L or inside R; always 0
    double density_lr = 0.0, density_ob = 0.0, density_oo = 0.0;
    /// Observed cv of the L-degrees of R vertices and of the B-degrees of O vertices.
    double degree_cv_lr = 0.0, degree_cv_ob = 0.0;
};

EmpiricalStats empirical_stats(const GeneratedInstance& inst);

} // namespace sround
