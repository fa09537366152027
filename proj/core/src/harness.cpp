#include "sround/harness.hpp"

#include "sround/bipartite.hpp"
#include "sround/errors.hpp"
#include "sround/generator.hpp"
#include "sround/rng.hpp"
#include "sround/stopwatch.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace sround {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::StdHigh: return "std-high";
    case Algorithm::StdLow: return "std-low";
    case Algorithm::StdRand: return "std-rand";
    case Algorithm::Dfs: return "dfs";
    case Algorithm::Heuristic: return "heuristic";
    case Algorithm::Naive: return "naive";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Apx: return "apx";
    case Algorithm::OctFirst: return "oct-first";
    case Algorithm::BipFirst: return "bip-first";
    case Algorithm::Recursive: return "recursive";
    case Algorithm::RecursiveOct: return "recursive-oct";
    case Algorithm::RecursiveBip: return "recursive-bip";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : all_algorithms) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

bool is_two_approximation(Algorithm a) noexcept {
    return a == Algorithm::StdHigh || a == Algorithm::StdLow || a == Algorithm::StdRand || a == Algorithm::Dfs;
}

bool is_lift(Algorithm a) noexcept { return static_cast<int>(a) >= static_cast<int>(Algorithm::Naive); }

LiftStrategy lift_strategy(Algorithm a) {
    if (!is_lift(a)) throw argument_error(std::string(to_string(a)) + " is not a lifting strategy");
    return static_cast<LiftStrategy>(static_cast<int>(a) - static_cast<int>(Algorithm::Naive));
}

Algorithm algorithm_for(LiftStrategy s) noexcept {
    return static_cast<Algorithm>(static_cast<int>(s) + static_cast<int>(Algorithm::Naive));
}

double approximation_ratio(std::size_t size, std::size_t worst_two_approx) {
    if (worst_two_approx == 0) throw argument_error("approximation ratio needs a nonzero 2-approximation size");
    return 2.0 * static_cast<double>(size) / static_cast<double>(worst_two_approx);
}

std::string_view to_string(DecompositionMode m) noexcept {
    return m == DecompositionMode::Prescribed ? "prescribed" : "procured";
}

std::optional<DecompositionMode> parse_decomposition_mode(std::string_view s) noexcept {
    if (s == "prescribed") return DecompositionMode::Prescribed;
    if (s == "procured") return DecompositionMode::Procured;
    return std::nullopt;
}

std::string_view to_string(OctMethod m) noexcept {
    switch (m) {
    case OctMethod::Resort: return "resort";
    case OctMethod::NoResort: return "no-resort";
    case OctMethod::Random: return "random";
    case OctMethod::Bfs: return "bfs";
    }
    return "?";
}

std::optional<OctMethod> parse_oct_method(std::string_view s) noexcept {
    for (OctMethod m : {OctMethod::Resort, OctMethod::NoResort, OctMethod::Random, OctMethod::Bfs}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

OctDecomposition procure_decomposition(const Graph& g, OctMethod method, std::uint64_t seed) {
    switch (method) {
    case OctMethod::Resort: return mis_oct(g, MisRule::Resort, seed);
    case OctMethod::NoResort: return mis_oct(g, MisRule::NoResort, seed);
    case OctMethod::Random: return mis_oct(g, MisRule::Random, seed);
    case OctMethod::Bfs: return bfs_oct(g, seed);
    }
    throw argument_error("unknown OCT method");
}

void PipelineConfig::validate() const {
    if (baselines.empty() && lifts.empty()) throw argument_error("pipeline has no algorithms configured");
    for (Algorithm a : baselines) {
        if (is_lift(a)) throw argument_error(std::string(to_string(a)) + " is a lift, not a baseline");
    }
}

namespace {

template <class T>
bool contains(const std::vector<T>& v, T x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

MisRule recursive_rule(OctMethod m) {
    switch (m) {
    case OctMethod::NoResort: return MisRule::NoResort;
    case OctMethod::Random: return MisRule::Random;
    default: return MisRule::Resort;
    }
}

void require_cover(const Graph& g, const VertexSet& s, Algorithm a) {
    if (!is_vertex_cover(g, s)) {
        throw invariant_error(std::string(to_string(a)) + " produced a set that is not a vertex cover");
    }
}

} // namespace

RunRecord run_pipeline(const Graph& g, const std::optional<OctDecomposition>& prescribed, const PipelineConfig& cfg,
                       std::string graph_id, std::string source) {
    cfg.validate();
    RunRecord rec;
    rec.graph_id = std::move(graph_id);
    rec.source = std::move(source);
    rec.mode = cfg.mode;
    rec.seed = cfg.seed;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    auto seed_for = [&](Algorithm a) { return derive_seed(cfg.seed, static_cast<std::uint64_t>(a) + 1); };

    for (Algorithm a : all_algorithms) {
        if (!contains(cfg.baselines, a)) continue;
        CoverResult r;
        switch (a) {
        case Algorithm::StdHigh: r = standard_two_approx(g, EdgeSelectionRule::HighDegree, seed_for(a)); break;
        case Algorithm::StdLow: r = standard_two_approx(g, EdgeSelectionRule::LowDegree, seed_for(a)); break;
        case Algorithm::StdRand: r = standard_two_approx(g, EdgeSelectionRule::Random, seed_for(a)); break;
        case Algorithm::Dfs: r = dfs_two_approx(g, seed_for(a)); break;
        case Algorithm::Heuristic: r = max_degree_heuristic(g); break;
        default: break;
        }
        require_cover(g, r.cover, a);
        rec.run(a) = AlgorithmRun{r.cover.size(), r.elapsed, 0.0, std::nullopt};
    }

    if (!cfg.lifts.empty()) {
        OctDecomposition d;
        if (cfg.mode == DecompositionMode::Prescribed) {
            if (!prescribed) throw argument_error("prescribed mode needs a decomposition");
            validate_decomposition(g, *prescribed);
            d = *prescribed;
            rec.oct_seconds = 0.0;
        } else {
            const Stopwatch timer;
            d = procure_decomposition(g, cfg.oct, derive_seed(cfg.seed, 100));
            rec.oct_seconds = timer.seconds();
            if (!is_bipartite_with_parts(g, d.left, d.right)) {
                throw invariant_error("procured decomposition is not bipartite");
            }
        }
        rec.oct_size = d.oct.size();

        const Stopwatch exact_timer;
        const SubgraphView bip = induced_subgraph(g, set_union(d.left, d.right));
        const CoverResult exact =
            min_vc_bipartite(bip.graph(), bip.to_local(d.left), bip.to_local(d.right), derive_seed(cfg.seed, 101));
        VertexSet solution = bip.to_parent(exact.cover);
        rec.exact_seconds = exact_timer.seconds();
        rec.edited_solution_size = solution.size();

        const LiftContext ctx(g, d.oct, solution);
        for (Algorithm a : all_algorithms) {
            if (!is_lift(a) || !contains(cfg.lifts, lift_strategy(a))) continue;
            const Stopwatch timer;
            const LiftOutcome out =
                run_lift(lift_strategy(a), ctx, {cfg.lift_two_approx, recursive_rule(cfg.oct), seed_for(a)});
            const double lift_seconds = timer.seconds();
            require_cover(g, set_union(solution, out.lift), a);
            rec.run(a) = AlgorithmRun{solution.size() + out.lift.size(),
                                      rec.oct_seconds + rec.exact_seconds + lift_seconds, lift_seconds, std::nullopt};
        }
    }

    for (Algorithm a : all_algorithms) {
        if (is_two_approximation(a) && rec.run(a)) {
            rec.worst_two_approx = std::max(rec.worst_two_approx.value_or(0), rec.run(a)->size);
        }
    }
    if (rec.worst_two_approx && *rec.worst_two_approx > 0) {
        for (auto& run : rec.runs) {
            if (run) run->ratio = approximation_ratio(run->size, *rec.worst_two_approx);
        }
    }
    return rec;
}

// ---------------------------------------------------------------------------

namespace {

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string csv_safe(std::string_view s) {
    std::string out(s);
    std::replace_if(out.begin(), out.end(), [](char c) { return c == ',' || c == '\n' || c == '\r' || c == '"'; },
                    '_');
    return out;
}

} // namespace

std::string csv_header() {
    std::string h = "graph_id,mode,seed,n,m,oct_size";
    for (Algorithm a : all_algorithms) {
        const std::string name(to_string(a));
        h += ",size_" + name + ",time_" + name + ",ratio_" + name;
    }
    return h;
}

std::string row_key(std::string_view graph_id, DecompositionMode mode, std::uint64_t seed) {
    return csv_safe(graph_id) + "," + std::string(to_string(mode)) + "," + std::to_string(seed);
}

std::string csv_row(const RunRecord& r, bool with_timings) {
    std::string row = row_key(r.graph_id, r.mode, r.seed) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + ",";
    if (r.oct_size) row += std::to_string(*r.oct_size);
    for (const auto& run : r.runs) {
        row += ',';
        if (!run) {
            row += ",,";
            continue;
        }
        row += std::to_string(run->size) + ',';
        if (with_timings) row += fixed(run->seconds);
        row += ',';
        if (run->ratio) row += fixed(*run->ratio);
    }
    return row;
}

std::set<std::string> completed_row_keys(std::string_view csv_text) {
    std::set<std::string> keys;
    while (!csv_text.empty()) {
        const std::size_t nl = csv_text.find('\n');
        if (nl == std::string_view::npos) break; // incomplete trailing line
        const std::string_view line = csv_text.substr(0, nl);
        csv_text.remove_prefix(nl + 1);
        if (line.empty() || line.starts_with("graph_id,")) continue;
        std::size_t cut = 0;
        for (int commas = 0; cut < line.size(); ++cut) {
            if (line[cut] == ',' && ++commas == 3) break;
        }
        keys.emplace(line.substr(0, cut));
    }
    return keys;
}

// ---------------------------------------------------------------------------

std::vector<SweepJob> sweep_jobs(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg) {
    const std::vector<std::size_t>& targets = sizes.empty() ? grid.target_m : sizes;
    if (targets.empty()) throw argument_error("sweep needs at least one target edge count");
    const std::vector<GridPoint> points = grid.points();
    std::vector<SweepJob> jobs;
    jobs.reserve(targets.size() * points.size() * grid.seeds_per_point);
    for (std::size_t target : targets) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            for (std::size_t s = 0; s < grid.seeds_per_point; ++s) {
                SweepJob job;
                job.point = points[p];
                job.target_m = target;
                job.seed = derive_seed(derive_seed(derive_seed(cfg.seed, target), p), s);
                job.graph_id = points[p].id(target);
                job.key = row_key(job.graph_id, cfg.mode, job.seed);
                jobs.push_back(std::move(job));
            }
        }
    }
    return jobs;
}

RunRecord run_sweep_job(const SweepJob& job, const PipelineConfig& cfg) {
    GeneratedInstance inst;
    try {
        inst = generate(job.point.params(job.target_m, job.seed));
    } catch (const error& e) {
        throw argument_error("grid point " + job.graph_id + ": " + e.what());
    }
    PipelineConfig local = cfg;
    local.seed = job.seed;
    const GeneratorParams& p = inst.params;
    const std::string source = "n_left=" + std::to_string(p.n_left) + ";n_right=" + std::to_string(p.n_right) +
                               ";n_oct=" + std::to_string(p.n_oct);
    return run_pipeline(inst.graph, inst.prescribed, local, job.graph_id, source);
}

SweepSummary sweep(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg,
                   std::ostream& out, const std::set<std::string>& done, bool write_header) {
    cfg.validate();
    std::vector<SweepJob> jobs;
    SweepSummary summary;
    for (SweepJob& job : sweep_jobs(grid, sizes, cfg)) {
        if (done.count(job.key)) {
            ++summary.rows_skipped;
        } else {
            jobs.push_back(std::move(job));
        }
    }
    auto emit = [&](const std::string& line) {
        out << line << '\n';
        out.flush();
        if (!out) throw io_error("failed writing sweep output");
    };
    if (write_header) emit(csv_header());

    if (cfg.jobs <= 1 || jobs.size() <= 1) {
        for (const SweepJob& job : jobs) {
            emit(csv_row(run_sweep_job(job, cfg), cfg.record_timings));
            ++summary.rows_written;
        }
        return summary;
    }

    // Workers fill slots; this thread writes them in job order.
    struct Slot {
        std::optional<std::string> row;
        std::exception_ptr failure;
    };
    std::vector<Slot> slots(jobs.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next_job{0};
    std::atomic<bool> stop{false};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next_job.fetch_add(1);
            if (i >= jobs.size() || stop) return;
            Slot result;
            try {
                result.row = csv_row(run_sweep_job(jobs[i], cfg), cfg.record_timings);
            } catch (...) {
                result.failure = std::current_exception();
            }
            {
                const std::lock_guard lock(mutex);
                slots[i] = std::move(result);
            }
            ready.notify_all();
        }
    };
    std::vector<std::thread> workers;
    const unsigned count = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(jobs.size()));
    for (unsigned t = 0; t < count; ++t) workers.emplace_back(work);

    std::exception_ptr failure;
    for (std::size_t i = 0; i < jobs.size() && !failure; ++i) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return slots[i].row || slots[i].failure; });
        if (slots[i].failure) {
            failure = slots[i].failure;
            break;
        }
        std::string row = std::move(*slots[i].row);
        lock.unlock();
        try {
            emit(row);
            ++summary.rows_written;
        } catch (...) {
            failure = std::current_exception();
        }
    }
    stop = true;
    for (std::thread& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
    return summary;
}

SweepSummary sweep_to_file(const Grid& grid, const std::vector<std::size_t>& sizes, const PipelineConfig& cfg,
                           const std::string& path) {
    std::string existing;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw io_error("cannot read '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        existing = buf.str();
        // drop a partially written last row
        if (!existing.empty() && existing.back() != '\n') {
            const std::size_t keep = existing.rfind('\n');
            existing.resize(keep == std::string::npos ? 0 : keep + 1);
            std::ofstream rewrite(path, std::ios::binary | std::ios::trunc);
            rewrite << existing;
            if (!rewrite) throw io_error("cannot rewrite '" + path + "'");
        }
    }
    const std::set<std::string> done = completed_row_keys(existing);
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    return sweep(grid, sizes, cfg, out, done, existing.empty());
}

} // namespace sround
