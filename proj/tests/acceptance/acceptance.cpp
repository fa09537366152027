// Acceptance gate: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include "oracles.hpp"

#include "sround/bipartite.hpp"
#include "sround/generator.hpp"
#include "sround/grid.hpp"
#include "sround/harness.hpp"
#include "sround/lifting.hpp"
#include "sround/oct.hpp"
#include "sround/stopwatch.hpp"
#include "sround/vc_approx.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace sround;

namespace {

// Tolerances and corpus sizes.
constexpr int bipartite_instances = 500;        // criterion 2
constexpr int approx_instances = 500;           // criterion 3
constexpr int approx_seeds = 5;
constexpr std::size_t lift_instances = 240;     // criteria 4 and 6
constexpr std::size_t lift_max_n = 2000;
constexpr double lift_max_edges = 20000.0;
constexpr int certificate_instances = 500;      // criterion 5
constexpr std::size_t fidelity_target = 100000; // criterion 8
constexpr int fidelity_seeds = 20;
constexpr double fidelity_tolerance = 0.03;
constexpr std::size_t corpus_target = 100000;   // criteria 9-12
constexpr std::uint64_t corpus_seed = 1;
// Runtime limits in seconds.
constexpr double limit_bipartite = 10, limit_approx = 30, limit_lift = 120, limit_certificates = 60,
                 limit_fidelity = 60, limit_sweep = 600;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Verdict within_time(Verdict v, double seconds, double limit) {
    v.detail += fmt(" [%.1fs, limit %.0fs]", seconds, limit);
    if (seconds > limit) v.pass = false;
    return v;
}

// ---- 1 ----
Verdict worked_example() {
    const double r = approximation_ratio(75, 100);
    return {r == 1.5, fmt("approximation_ratio(75, 100) = %.17g", r)};
}

// ---- 2 ----
Verdict bipartite_oracle() {
    const Stopwatch timer;
    Rng rng(2);
    int match = 0, koenig = 0;
    for (int t = 0; t < bipartite_instances; ++t) {
        const oracle::Bipartite b = oracle::random_bipartite(1 + rng.below(14), 0.1 + 0.7 * rng.uniform01(), rng);
        const Matching m = hopcroft_karp(b.graph, b.left, b.right, t);
        const VertexSet cover = koenig_cover(b.graph, b.left, b.right, m);
        const CoverResult r = min_vc_bipartite(b.graph, b.left, b.right, t);
        match += r.cover.size() == brute_force_min_vc(b.graph).size() && is_vertex_cover(b.graph, r.cover);
        koenig += cover.size() == m.size;
    }
    const Verdict v{match == bipartite_instances && koenig == bipartite_instances,
                    fmt("%d/%d sizes equal brute force, %d/%d |cover| = |matching|", match, bipartite_instances,
                        koenig, bipartite_instances)};
    return within_time(v, timer.seconds(), limit_bipartite);
}

// ---- 3 ----
Verdict approx_guarantee() {
    const Stopwatch timer;
    Rng rng(3);
    int runs = 0, good = 0;
    for (int t = 0; t < approx_instances; ++t) {
        const Graph g = oracle::random_graph(1 + rng.below(14), 0.05 + 0.6 * rng.uniform01(), rng);
        const std::size_t opt = brute_force_min_vc(g).size();
        for (std::uint64_t seed = 0; seed < approx_seeds; ++seed) {
            for (EdgeSelectionRule r :
                 {EdgeSelectionRule::HighDegree, EdgeSelectionRule::LowDegree, EdgeSelectionRule::Random}) {
                const VertexSet c = standard_two_approx(g, r, seed).cover;
                ++runs;
                good += is_vertex_cover(g, c) && c.size() <= 2 * opt;
            }
            const VertexSet d = dfs_two_approx(g, seed).cover;
            ++runs;
            good += is_vertex_cover(g, d) && d.size() <= 2 * opt;
        }
    }
    return within_time({good == runs, fmt("%d/%d runs within 2*OPT on %d graphs", good, runs, approx_instances)},
                       timer.seconds(), limit_approx);
}

// ---- 4 and 6 ----
struct LiftCorpusResult {
    std::size_t instances = 0, lift_runs = 0, valid = 0, greedy_runs = 0, greedy_ok = 0, max_n = 0;
    double max_expected = 0, seconds = 0;
};

const LiftCorpusResult& lift_corpus() {
    static const LiftCorpusResult result = [] {
        LiftCorpusResult res;
        const Stopwatch timer;
        const std::vector<GridPoint> points = parse_grid(*grid_preset("synthetic")).points();
        constexpr OctMethod methods[] = {OctMethod::Resort, OctMethod::NoResort, OctMethod::Random, OctMethod::Bfs};
        constexpr LiftStrategy strategies[] = {
            LiftStrategy::Naive,    LiftStrategy::Greedy,    LiftStrategy::Apx,          LiftStrategy::OctFirst,
            LiftStrategy::BipFirst, LiftStrategy::Recursive, LiftStrategy::RecursiveOct, LiftStrategy::RecursiveBip};
        for (std::size_t k = 0; k < lift_instances; ++k) {
            const GridPoint& pt = points[k * points.size() / lift_instances];
            // grid proportions at n = 2000, densities scaled down to cap E[m]
            const std::size_t n = lift_max_n;
            PartSizes s;
            s.n_oct = static_cast<std::size_t>(std::llround(pt.oct_frac * n));
            s.n_right = static_cast<std::size_t>(std::llround((n - s.n_oct) / (1.0 + pt.ratio_lr)));
            s.n_left = n - s.n_oct - s.n_right;
            const double full = expected_edges(s, pt.d_lr, pt.d_ob, pt.d_oo);
            const double scale = std::min(1.0, lift_max_edges / full);
            GeneratorParams p;
            p.n_left = s.n_left;
            p.n_right = s.n_right;
            p.n_oct = s.n_oct;
            p.d_lr = pt.d_lr * scale;
            p.d_ob = pt.d_ob * scale;
            p.d_oo = pt.d_oo * scale;
            p.cv_lr = pt.cv_lr;
            p.cv_ob = pt.cv_ob;
            p.seed = derive_seed(4, k);
            const GeneratedInstance inst = generate(p);
            const Graph& g = inst.graph;
            ++res.instances;
            res.max_n = std::max(res.max_n, g.num_vertices());
            res.max_expected = std::max(res.max_expected, p.expected_edges());

            for (DecompositionMode mode : {DecompositionMode::Prescribed, DecompositionMode::Procured}) {
                const OctDecomposition d = mode == DecompositionMode::Prescribed
                                               ? inst.prescribed
                                               : procure_decomposition(g, methods[k % 4], p.seed);
                const SubgraphView bip = induced_subgraph(g, set_union(d.left, d.right));
                const VertexSet solution =
                    bip.to_parent(min_vc_bipartite(bip.graph(), bip.to_local(d.left), bip.to_local(d.right), k).cover);
                const LiftContext ctx(g, d.oct, solution);
                std::size_t naive = 0;
                for (LiftStrategy st : strategies) {
                    const LiftOutcome out = run_lift(st, ctx, {EdgeSelectionRule::HighDegree, MisRule::Resort, k});
                    ++res.lift_runs;
                    res.valid += is_vertex_cover(g, set_union(out.lift, solution));
                    if (st == LiftStrategy::Naive) naive = out.lift.size();
                    if (st == LiftStrategy::Greedy) {
                        ++res.greedy_runs;
                        res.greedy_ok += out.lift.size() <= naive;
                    }
                }
            }
        }
        res.seconds = timer.seconds();
        return res;
    }();
    return result;
}

Verdict lift_validity() {
    const LiftCorpusResult& r = lift_corpus();
    const bool sized = r.instances >= 200 && r.max_n <= lift_max_n && r.max_expected <= lift_max_edges * (1 + 1e-9);
    const Verdict v{sized && r.valid == r.lift_runs,
                    fmt("%zu/%zu lifts complete a cover on %zu instances (max n %zu, max E[m] %.0f)", r.valid,
                        r.lift_runs, r.instances, r.max_n, r.max_expected)};
    return within_time(v, r.seconds, limit_lift);
}

Verdict greedy_dominance() {
    const LiftCorpusResult& r = lift_corpus();
    return {r.greedy_runs > 0 && r.greedy_ok == r.greedy_runs,
            fmt("%zu/%zu greedy lifts no larger than naive", r.greedy_ok, r.greedy_runs)};
}

// ---- 5 ----
Verdict certificates() {
    const Stopwatch timer;
    Rng rng(5);
    int checks = 0, good = 0;
    for (int t = 0; t < certificate_instances; ++t) {
        const Graph g = oracle::random_graph(2 + rng.below(13), 0.15 + 0.5 * rng.uniform01(), rng);
        const LiftContext ctx = oracle::random_context(g, 0.2 + 0.6 * rng.uniform01(), rng);
        const std::size_t best = oracle::optimal_lift_size(ctx);
        for (EdgeSelectionRule rule :
             {EdgeSelectionRule::HighDegree, EdgeSelectionRule::LowDegree, EdgeSelectionRule::Random}) {
            const std::uint64_t seed = rng.next();
            const LiftOutcome apx = lift_apx(ctx, rule, seed);
            ++checks;
            good += apx.lift.size() <= 2 * best;

            const LiftOutcome of = lift_oct_first(ctx, rule, seed);
            const std::size_t l1 = *of.l1_size, l2 = *of.l2_size;
            ++checks;
            // |lift| <= 2/(1+p)·|L*|, cleared of denominators
            good += of.lift.size() * (2 * l1 + l2) <= 2 * best * (l1 + l2);
            ++checks;
            good += 2 * best >= l2 + 2 * l1 && *of.lower_bound * 2 == l2 + 2 * l1;

            const LiftOutcome bf = lift_bip_first(ctx, rule, seed);
            const std::size_t b1 = *bf.l1_size, b2 = *bf.l2_size;
            if (b1 > 0) {
                ++checks;
                // |lift| <= |L*| / p  <=>  |lift|·b1 <= |L*|·(b1 + b2)
                good += bf.lift.size() * b1 <= best * (b1 + b2);
            }
        }
    }
    return within_time({good == checks, fmt("%d/%d certificate inequalities hold on %d contexts", good, checks,
                                            certificate_instances)},
                       timer.seconds(), limit_certificates);
}

// ---- 7 ----
Verdict adversarial() {
    std::vector<Edge> edges;
    for (vertex_t v = 0; v < 8; ++v) edges.push_back({v, static_cast<vertex_t>((v + 1) % 8)});
    for (vertex_t k = 0; k < 4; ++k) edges.push_back({static_cast<vertex_t>(2 * k + 1), static_cast<vertex_t>(8 + k)});
    const Graph g = Graph::from_edges(12, edges);
    const LiftContext ctx(g, VertexSet::from(12, {1, 3, 5, 7, 8, 9, 10, 11}), VertexSet(12),
                          VertexSet::from(12, {0, 2, 4, 6}));
    const std::size_t best = oracle::optimal_lift_size(ctx);
    const LiftOutcome out = lift_bip_first(ctx, EdgeSelectionRule::HighDegree, 0, ExactSide::NonSelected);
    return {best > 0 && out.lift.size() == 3 * best,
            fmt("C8 with 4 pendants: |lift| = %zu, |L*| = %zu", out.lift.size(), best)};
}

// ---- 8 ----
Verdict generator_fidelity() {
    const Stopwatch timer;
    const GridPoint pt{10, 0.1, 0.005, 0.05, 0.01, 1.5, 1.5};
    double total = 0, expected = 0;
    int bipartite = 0;
    for (int s = 0; s < fidelity_seeds; ++s) {
        const GeneratorParams p = pt.params(fidelity_target, derive_seed(8, s));
        expected = p.expected_edges();
        const GeneratedInstance inst = generate(p);
        total += static_cast<double>(inst.graph.num_edges());
        bipartite += is_bipartite_with_parts(inst.graph, inst.prescribed.left, inst.prescribed.right);
    }
    const double mean = total / fidelity_seeds;
    const double dev = std::abs(mean - expected) / expected;
    const GeneratorParams p = pt.params(fidelity_target, 99);
    std::ostringstream a, b;
    write_edge_list(a, generate(p).graph);
    write_edge_list(b, generate(p).graph);
    const bool same = a.str() == b.str();
    const Verdict v{dev <= fidelity_tolerance && bipartite == fidelity_seeds && same,
                    fmt("mean m %.1f vs E[m] %.1f (%.2f%%, tolerance %.0f%%), %d/%d bipartite, repeat %s", mean,
                        expected, dev * 100, fidelity_tolerance * 100, bipartite, fidelity_seeds,
                        same ? "identical" : "differs")};
    return within_time(v, timer.seconds(), limit_fidelity);
}

// ---- 9-12 ----
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    double mean(const std::string& column) const {
        const auto at = std::find(header.begin(), header.end(), column);
        if (at == header.end()) throw std::runtime_error("no column " + column);
        const auto idx = static_cast<std::size_t>(at - header.begin());
        double sum = 0;
        for (const auto& r : rows) sum += std::stod(r.at(idx));
        return sum / static_cast<double>(rows.size());
    }
};

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cols.push_back(cell);
        if (!line.empty() && line.back() == ',') cols.emplace_back();
        if (first) {
            t.header = cols;
            first = false;
        } else {
            t.rows.push_back(cols);
        }
    }
    return t;
}

PipelineConfig corpus_config() {
    PipelineConfig cfg;
    cfg.mode = DecompositionMode::Procured;
    cfg.oct = OctMethod::Resort;
    cfg.seed = corpus_seed;
    cfg.record_timings = false;
    return cfg;
}

struct Corpus {
    std::string csv;
    Table table;
    double seconds = 0;
};

const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus out;
        const Stopwatch timer;
        std::ostringstream s;
        sweep(parse_grid(*grid_preset("synthetic")), {corpus_target}, corpus_config(), s);
        out.csv = s.str();
        out.table = parse_csv(out.csv);
        out.seconds = timer.seconds();
        return out;
    }();
    return c;
}

Verdict baseline_ordering() {
    const Corpus& c = corpus();
    const double high = c.table.mean("size_std-high"), low = c.table.mean("size_std-low"),
                 rnd = c.table.mean("size_std-rand"), dfs = c.table.mean("size_dfs");
    const bool pass = high < std::min(low, std::min(rnd, dfs)) && low > std::max(high, std::max(rnd, dfs));
    const Verdict v{pass, fmt("%zu graphs, mean sizes std-high %.1f, dfs %.1f, std-rand %.1f, std-low %.1f",
                              c.table.rows.size(), high, dfs, rnd, low)};
    return within_time(v, c.seconds, limit_sweep);
}

Verdict rounding_beats_baselines() {
    const Corpus& c = corpus();
    const double greedy = c.table.mean("ratio_greedy"), high = c.table.mean("ratio_std-high"),
                 dfs = c.table.mean("ratio_dfs");
    return {greedy < high && greedy < dfs,
            fmt("mean ratio exact+greedy %.4f, std-high %.4f, dfs %.4f", greedy, high, dfs)};
}

Verdict oct_ordering() {
    const Stopwatch timer;
    const Grid grid = parse_grid(*grid_preset("synthetic"));
    const PipelineConfig cfg = corpus_config();
    double resort = 0, no_resort = 0, random = 0;
    std::size_t count = 0;
    for (const SweepJob& job : sweep_jobs(grid, {corpus_target}, cfg)) {
        const GeneratedInstance inst = generate(job.point.params(job.target_m, job.seed));
        resort += static_cast<double>(procure_decomposition(inst.graph, OctMethod::Resort, job.seed).oct.size());
        no_resort += static_cast<double>(procure_decomposition(inst.graph, OctMethod::NoResort, job.seed).oct.size());
        random += static_cast<double>(procure_decomposition(inst.graph, OctMethod::Random, job.seed).oct.size());
        ++count;
    }
    const double n = static_cast<double>(count);
    const Verdict v{resort <= no_resort && resort <= random,
                    fmt("mean |O| over %zu graphs: resort %.1f, no-resort %.1f, random %.1f", count, resort / n,
                        no_resort / n, random / n)};
    return within_time(v, timer.seconds(), limit_sweep);
}

Verdict determinism() {
    const Corpus& c = corpus();
    const Stopwatch timer;
    std::ostringstream again;
    sweep(parse_grid(*grid_preset("synthetic")), {corpus_target}, corpus_config(), again);
    const bool same = again.str() == c.csv;
    return within_time({same, fmt("second sweep %s (%zu bytes)", same ? "byte-identical" : "differs", c.csv.size())},
                       timer.seconds(), limit_sweep);
}

} // namespace

int main(int argc, char** argv) {
    const std::map<int, std::pair<const char*, std::function<Verdict()>>> criteria = {
        {1, {"worked-example ratio", worked_example}},
        {2, {"bipartite exact vs oracle", bipartite_oracle}},
        {3, {"2-approximation guarantee", approx_guarantee}},
        {4, {"lift validity", lift_validity}},
        {5, {"factor certificates", certificates}},
        {6, {"greedy dominates naive", greedy_dominance}},
        {7, {"bip-first adversarial instance", adversarial}},
        {8, {"generator fidelity", generator_fidelity}},
        {9, {"std-high smallest, std-low largest", baseline_ordering}},
        {10, {"structural rounding beats std-high and dfs", rounding_beats_baselines}},
        {11, {"resort OCT no larger than alternatives", oct_ordering}},
        {12, {"sweep determinism", determinism}},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& [id, entry] : criteria) {
        if (!wanted.empty() && !wanted.count(id)) continue;
        Verdict v;
        try {
            v = entry.second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("%s criterion %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, entry.first, v.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
