// Command line front end: generate instances, solve one graph, or sweep a grid.

#include "sround/errors.hpp"
#include "sround/generator.hpp"
#include "sround/graph.hpp"
#include "sround/grid.hpp"
#include "sround/harness.hpp"
#include "sround/oct.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sround;

namespace {

enum exit_code { ok = 0, usage = 1, input = 2, internal = 3 };

// Malformed flag values; reported like CLI11 parse errors.
struct usage_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

struct PipelineFlags {
    std::string mode = "procured";
    std::string oct = "resort";
    std::string baselines = "std-high,std-low,std-rand,dfs,heuristic";
    std::string lifts = "naive,greedy,apx,oct-first,bip-first,recursive,recursive-oct,recursive-bip";
    std::string lift_two_approx = "std-high";
    std::uint64_t seed = 0;
    bool no_timings = false;
    std::string out;
    unsigned jobs = 1;

    void add_to(CLI::App& app, bool with_jobs) {
        app.add_option("--seed", seed, "Master seed")->capture_default_str();
        app.add_option("--mode", mode, "Decomposition mode: prescribed | procured")->capture_default_str();
        app.add_option("--oct", oct, "OCT heuristic: resort | no-resort | random | bfs")->capture_default_str();
        app.add_option("--two-approx", baselines, "Comma-separated baselines (std-high,std-low,std-rand,dfs,heuristic)")
            ->capture_default_str();
        app.add_option("--lifts", lifts, "Comma-separated lifting strategies, or 'none'")->capture_default_str();
        app.add_option("--lift-approx", lift_two_approx, "2-approximation used inside apx/oct-first/bip-first")
            ->capture_default_str();
        app.add_flag("--no-timings", no_timings, "Leave time cells empty for reproducible output");
        app.add_option("--out", out, "Output CSV path (default stdout)");
        if (with_jobs) app.add_option("--jobs", jobs, "Concurrent rows")->check(CLI::PositiveNumber);
    }

    PipelineConfig config() const {
        try {
            return build();
        } catch (const argument_error& e) {
            throw usage_failure(e.what());
        }
    }

    PipelineConfig build() const {
        PipelineConfig cfg;
        const auto m = parse_decomposition_mode(mode);
        if (!m) throw argument_error("unknown mode '" + mode + "'");
        cfg.mode = *m;
        const auto o = parse_oct_method(oct);
        if (!o) throw argument_error("unknown OCT heuristic '" + oct + "'");
        cfg.oct = *o;
        cfg.baselines.clear();
        for (const std::string& name : split(baselines)) {
            const auto a = parse_algorithm(name);
            if (!a || is_lift(*a)) throw argument_error("unknown baseline '" + name + "'");
            cfg.baselines.push_back(*a);
        }
        cfg.lifts.clear();
        if (lifts != "none") {
            for (const std::string& name : split(lifts)) {
                const auto s = parse_lift_strategy(name);
                if (!s) throw argument_error("unknown lifting strategy '" + name + "'");
                cfg.lifts.push_back(*s);
            }
        }
        const auto r = parse_edge_selection_rule(lift_two_approx);
        if (!r) throw argument_error("unknown 2-approximation '" + lift_two_approx + "'");
        cfg.lift_two_approx = *r;
        cfg.seed = seed;
        cfg.record_timings = !no_timings;
        cfg.output_path = out;
        cfg.jobs = jobs;
        cfg.validate();
        return cfg;
    }
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::string& tok : split(text)) {
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
        if (tok.front() == '-' || *end != '\0' || errno == ERANGE || v == 0) {
            throw usage_failure("bad edge count '" + tok + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw io_error("cannot write '" + path.string() + "'");
}

void write_instance(const std::filesystem::path& stem, const GeneratedInstance& inst) {
    std::ostringstream edges, oct;
    write_edge_list(edges, inst.graph);
    write_decomposition(oct, inst.prescribed);
    write_file(stem.string() + ".edges", edges.str());
    write_file(stem.string() + ".oct", oct.str());
    if (inst.clipped_weights > 0) {
        std::fprintf(stderr, "warning: %s: %zu weights clipped at probability 1\n", stem.string().c_str(),
                     inst.clipped_weights);
    }
}

struct GenerateFlags {
    GeneratorParams params;
    std::string grid;
    std::string sizes;
    std::string out = "graph";
};

int run_generate(const GenerateFlags& f) {
    if (f.grid.empty()) {
        const GeneratedInstance inst = generate(f.params);
        write_instance(f.out, inst);
        std::printf("%s: n=%zu m=%zu oct=%zu\n", f.out.c_str(), inst.graph.num_vertices(), inst.graph.num_edges(),
                    inst.prescribed.oct.size());
        return ok;
    }
    const Grid grid = load_grid(f.grid);
    PipelineConfig cfg;
    cfg.seed = f.params.seed;
    std::filesystem::create_directories(f.out);
    for (const SweepJob& job : sweep_jobs(grid, parse_sizes(f.sizes), cfg)) {
        const GeneratedInstance inst = generate(job.point.params(job.target_m, job.seed));
        const std::filesystem::path stem =
            std::filesystem::path(f.out) / (job.graph_id + "_s" + std::to_string(job.seed));
        write_instance(stem, inst);
        std::printf("%s: n=%zu m=%zu oct=%zu\n", stem.string().c_str(), inst.graph.num_vertices(),
                    inst.graph.num_edges(), inst.prescribed.oct.size());
    }
    return ok;
}

int run_solve(const std::string& graph_path, const std::string& decomposition_path, bool compact,
              const PipelineFlags& flags) {
    const PipelineConfig cfg = flags.config();
    const ParsedGraph parsed = load_edge_list(graph_path, {.compact_ids = compact});
    if (parsed.stats.self_loops || parsed.stats.duplicate_edges) {
        std::fprintf(stderr, "warning: dropped %zu self-loops and %zu duplicate edges\n", parsed.stats.self_loops,
                     parsed.stats.duplicate_edges);
    }
    std::optional<OctDecomposition> prescribed;
    if (!decomposition_path.empty()) {
        prescribed = load_decomposition(decomposition_path, parsed.graph.num_vertices());
    }
    if (cfg.mode == DecompositionMode::Prescribed && !prescribed) {
        throw argument_error("--mode prescribed needs --decomposition");
    }
    const std::string id = std::filesystem::path(graph_path).stem().string();
    const RunRecord rec = run_pipeline(parsed.graph, prescribed, cfg, id, graph_path);
    const std::string text = csv_header() + "\n" + csv_row(rec, cfg.record_timings) + "\n";
    if (cfg.output_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_file(cfg.output_path, text);
    }
    return ok;
}

int run_sweep(const std::string& grid_name, const std::string& sizes, const PipelineFlags& flags) {
    const PipelineConfig cfg = flags.config();
    const Grid grid = load_grid(grid_name);
    const std::vector<std::size_t> targets = parse_sizes(sizes);
    SweepSummary summary;
    if (cfg.output_path.empty()) {
        summary = sweep(grid, targets, cfg, std::cout);
    } else {
        summary = sweep_to_file(grid, targets, cfg, cfg.output_path);
    }
    std::fprintf(stderr, "%zu rows written, %zu already present\n", summary.rows_written, summary.rows_skipped);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural rounding for vertex cover: instance generation and benchmarking"};
    app.require_subcommand(1);

    GenerateFlags gen;
    CLI::App* generate_cmd = app.add_subcommand("generate", "Write near-bipartite graphs and their decompositions");
    generate_cmd->add_option("--n-left", gen.params.n_left, "Vertices in L");
    generate_cmd->add_option("--n-right", gen.params.n_right, "Vertices in R");
    generate_cmd->add_option("--n-oct", gen.params.n_oct, "Vertices in O");
    generate_cmd->add_option("--d-lr", gen.params.d_lr, "L-R edge density");
    generate_cmd->add_option("--d-ob", gen.params.d_ob, "O-(L+R) edge density");
    generate_cmd->add_option("--d-oo", gen.params.d_oo, "Edge density inside O");
    generate_cmd->add_option("--cv-lr", gen.params.cv_lr, "cv of L-degree expectations over R");
    generate_cmd->add_option("--cv-ob", gen.params.cv_ob, "cv of (L+R)-degree expectations over O");
    generate_cmd->add_option("--seed", gen.params.seed, "Seed (master seed with --grid)");
    generate_cmd->add_option("--grid", gen.grid, "Preset name or grid file; writes one instance per row");
    generate_cmd->add_option("--sizes", gen.sizes, "Comma-separated target edge counts (with --grid)");
    generate_cmd->add_option("--out", gen.out, "Output stem, or directory with --grid")->capture_default_str();

    PipelineFlags solve_flags;
    std::string graph_path, decomposition_path;
    bool compact = false;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Run the pipeline on one edge-list file");
    solve_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    solve_cmd->add_option("--decomposition", decomposition_path, "Decomposition file for prescribed mode");
    solve_cmd->add_flag("--compact-ids", compact, "Remap arbitrary vertex ids to 0..n-1");
    solve_flags.add_to(*solve_cmd, false);

    PipelineFlags sweep_flags;
    std::string grid_name, sizes;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Generate and solve every grid point, one CSV row each");
    sweep_cmd->add_option("--grid", grid_name, "Preset name (synthetic, large) or grid file")->required();
    sweep_cmd->add_option("--sizes", sizes, "Comma-separated target edge counts (default: the grid's)");
    sweep_flags.add_to(*sweep_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*generate_cmd) return run_generate(gen);
        if (*solve_cmd) return run_solve(graph_path, decomposition_path, compact, solve_flags);
        if (*sweep_cmd) return run_sweep(grid_name, sizes, sweep_flags);
    } catch (const usage_failure& e) {
        std::fprintf(stderr, "error: %s\nRun with --help for more information.\n", e.what());
        return usage;
    } catch (const contract_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return internal;
    } catch (const invariant_error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return internal;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return input;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return input;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return internal;
    }
    return usage;
}
