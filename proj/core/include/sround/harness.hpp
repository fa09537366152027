#pragma once

#include "sround/graph.hpp"
#include "sround/grid.hpp"
#include "sround/lifting.hpp"
#include "sround/oct.hpp"
#include "sround/vc_approx.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sround {

/// Every algorithm the harness can record, in CSV column order.
enum class Algorithm {
    StdHigh,
    StdLow,
    StdRand,
    Dfs,
    Heuristic,
    Naive,
    Greedy,
    Apx,
    OctFirst,
    BipFirst,
    Recursive,
    RecursiveOct,
    RecursiveBip,
};

inline constexpr std::size_t algorithm_count = 13;
inline constexpr std::array<Algorithm, algorithm_count> all_algorithms = {
    Algorithm::StdHigh,   Algorithm::StdLow,   Algorithm::StdRand,   Algorithm::Dfs,
    Algorithm::Heuristic, Algorithm::Naive,    Algorithm::Greedy,    Algorithm::Apx,
    Algorithm::OctFirst,  Algorithm::BipFirst, Algorithm::Recursive, Algorithm::RecursiveOct,
    Algorithm::RecursiveBip,
};

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
/// The four 2-approximation variants whose maximum anchors the ratio.
bool is_two_approximation(Algorithm a) noexcept;
bool is_lift(Algorithm a) noexcept;
LiftStrategy lift_strategy(Algorithm a);
Algorithm algorithm_for(LiftStrategy s) noexcept;

/// 2·size / worst_two_approx; argument_error when worst_two_approx is 0.
double approximation_ratio(std::size_t size, std::size_t worst_two_approx);

enum class DecompositionMode { Prescribed, Procured };
enum class OctMethod { Resort, NoResort, Random, Bfs };

std::string_view to_string(DecompositionMode m) noexcept;
std::optional<DecompositionMode> parse_decomposition_mode(std::string_view s) noexcept;
std::string_view to_string(OctMethod m) noexcept;
std::optional<OctMethod> parse_oct_method(std::string_view s) noexcept;

OctDecomposition procure_decomposition(const Graph& g, OctMethod method, std::uint64_t seed);

struct PipelineConfig {
    DecompositionMode mode = DecompositionMode::Procured;
    OctMethod oct = OctMethod::Resort;
    /// Baselines: std-high, std-low, std-rand, dfs, heuristic.
    std::vector<Algorithm> baselines = {Algorithm::StdHigh, Algorithm::StdLow, Algorithm::StdRand, Algorithm::Dfs,
                                        Algorithm::Heuristic};
    std::vector<LiftStrategy> lifts = {LiftStrategy::Naive,     LiftStrategy::Greedy,       LiftStrategy::Apx,
                                       LiftStrategy::OctFirst,  LiftStrategy::BipFirst,     LiftStrategy::Recursive,
                                       LiftStrategy::RecursiveOct, LiftStrategy::RecursiveBip};
    /// 2-approximation used inside apx, oct-first and bip-first.
    EdgeSelectionRule lift_two_approx = EdgeSelectionRule::HighDegree;
    std::uint64_t seed = 0;
    /// Off: time cells are left empty so output is byte-reproducible.
    bool record_timings = true;
    std::string output_path; ///< empty: stdout
    unsigned jobs = 1;

    /// argument_error on an empty algorithm set or a non-baseline in `baselines`.
    void validate() const;
};

struct AlgorithmRun {
    std::size_t size = 0;
    double seconds = 0.0;      ///< structural rounding: oct + exact + lift
    double lift_seconds = 0.0; ///< lift phase only (0 for baselines)
    std::optional<double> ratio;
};

struct RunRecord {
    std::string graph_id;
    std::string source; ///< generator params or file path
    DecompositionMode mode = DecompositionMode::Procured;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> oct_size;
    std::optional<std::size_t> edited_solution_size;
    double oct_seconds = 0.0;
    double exact_seconds = 0.0;
    std::optional<std::size_t> worst_two_approx;
    std::array<std::optional<AlgorithmRun>, algorithm_count> runs{};

    const std::optional<AlgorithmRun>& run(Algorithm a) const { return runs[static_cast<std::size_t>(a)]; }
    std::optional<AlgorithmRun>& run(Algorithm a) { return runs[static_cast<std::size_t>(a)]; }
};

/// Runs the configured baselines then, if any lift is configured, obtains
/// (O, L, R), solves G[L ∪ R] exactly and applies each lift with X = O.
/// Every cover is checked before it is recorded (invariant_error on failure).
/// A supplied `prescribed` decomposition is validated (structure_error).
RunRecord run_pipeline(const Graph& g, const std::optional<OctDecomposition>& prescribed, const PipelineConfig& cfg,
                       std::string graph_id = "graph", std::string source = {});

// ---- CSV ----

/// graph_id,mode,seed,n,m,oct_size then size_/time_/ratio_ for every algorithm.
std::string csv_header();
std::string csv_row(const RunRecord& r, bool with_timings);
/// Key identifying a row for resumption: "graph_id,mode,seed".
std::string row_key(std::string_view graph_id, DecompositionMode mode, std::uint64_t seed);
/// Keys of the data rows in existing CSV text.
std::set<std::string> completed_row_keys(std::string_view csv_text);

// ---- sweeps ----

struct SweepJob {
    GridPoint point;
    std::size_t target_m = 0;
    std::uint64_t seed = 0;
    std::string graph_id;
    std::string key;
};

/// Rows in output order: target sizes, then grid points, then seeds.
std::vector<SweepJob> sweep_jobs(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg);

RunRecord run_sweep_job(const SweepJob& job, const PipelineConfig& cfg);

struct SweepSummary {
    std::size_t rows_written = 0;
    std::size_t rows_skipped = 0;
};

/// Writes one CSV row per job not in `done`, flushing after each row. Rows
/// are computed on cfg.jobs threads but written in job order. Writes the
/// header first when `write_header` is set.
SweepSummary sweep(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg,
                   std::ostream& out, const std::set<std::string>& done = {}, bool write_header = true);

/// File variant: resumes from rows already present in `path`.
SweepSummary sweep_to_file(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg,
                           const std::string& path);

} // namespace sround
