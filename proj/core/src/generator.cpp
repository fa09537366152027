#include "sround/generator.hpp"

#include "sround/errors.hpp"
#include "sround/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace sround {

namespace {

bool is_probability(double d) { return d >= 0.0 && d <= 1.0; }

} // namespace

void GeneratorParams::validate() const {
    if (n_left < n_right) throw argument_error("generator requires n_left >= n_right");
    if (!is_probability(d_lr) || !is_probability(d_ob) || !is_probability(d_oo)) {
        throw argument_error("generator densities must lie in [0, 1]");
    }
    if (!(cv_lr >= 0.0) || !(cv_ob >= 0.0)) throw argument_error("coefficient of variation must be >= 0");
    if (num_vertices() > static_cast<std::size_t>(std::numeric_limits<vertex_t>::max())) {
        throw argument_error("generator vertex count exceeds id range");
    }
}

double expected_edges(const PartSizes& s, double d_lr, double d_ob, double d_oo) noexcept {
    const auto nl = static_cast<double>(s.n_left);
    const auto nr = static_cast<double>(s.n_right);
    const auto no = static_cast<double>(s.n_oct);
    return d_lr * nl * nr + d_ob * no * (nl + nr) + d_oo * no * (no - 1.0) / 2.0;
}

double GeneratorParams::expected_edges() const noexcept {
    return sround::expected_edges({n_left, n_right, n_oct}, d_lr, d_ob, d_oo);
}

PartSizes resolve_sizes(double ratio_lr, double oct_frac, double d_lr, double d_ob, double d_oo,
                        std::size_t target_m) {
    if (target_m < 1) throw argument_error("target edge count must be >= 1");
    if (!(ratio_lr >= 1.0)) throw argument_error("L/R ratio must be >= 1");
    if (!(oct_frac >= 0.0 && oct_frac < 1.0)) throw argument_error("OCT fraction must lie in [0, 1)");
    if (!is_probability(d_lr) || !is_probability(d_ob) || !is_probability(d_oo)) {
        throw argument_error("densities must lie in [0, 1]");
    }
    // With n total vertices: E[m](n) = a·n² − b·n.
    const double f = oct_frac;
    const double left_share = ratio_lr / (1.0 + ratio_lr);
    const double right_share = 1.0 / (1.0 + ratio_lr);
    const double a = d_lr * left_share * right_share * (1 - f) * (1 - f) + d_ob * f * (1 - f) + d_oo * f * f / 2.0;
    const double b = d_oo * f / 2.0;
    if (!(a > 0.0)) throw argument_error("densities give no expected edges for these proportions");
    const auto target = static_cast<double>(target_m);
    const double n_real = (b + std::sqrt(b * b + 4.0 * a * target)) / (2.0 * a);

    auto sizes_for = [&](std::size_t n) {
        PartSizes s;
        s.n_oct = static_cast<std::size_t>(std::llround(f * static_cast<double>(n)));
        const std::size_t n_b = n - std::min(n, s.n_oct);
        s.n_right = std::min(n_b / 2, static_cast<std::size_t>(std::llround(static_cast<double>(n_b) * right_share)));
        s.n_left = n_b - s.n_right;
        return s;
    };
    auto rel_error = [&](const PartSizes& s) {
        return std::abs(expected_edges(s, d_lr, d_ob, d_oo) - target) / target;
    };

    // Scan outward from the real-valued solution so the nearest size wins ties.
    const auto center = std::max<long long>(1, std::llround(n_real));
    const long long spread = std::max<long long>(3, center / 100);
    PartSizes best = sizes_for(static_cast<std::size_t>(center));
    double best_error = rel_error(best);
    for (long long step = 1; step <= spread; ++step) {
        for (const long long n : {center - step, center + step}) {
            if (n < 1) continue;
            const PartSizes s = sizes_for(static_cast<std::size_t>(n));
            const double e = rel_error(s);
            if (e < best_error) {
                best = s;
                best_error = e;
            }
        }
    }
    if (best_error > 0.01) {
        throw argument_error("cannot match " + std::to_string(target_m) + " expected edges within 1% (best " +
                             std::to_string(best_error * 100.0) + "%)");
    }
    return best;
}

namespace {

std::vector<double> draw_weights(std::size_t count, double cv, std::mt19937_64& engine) {
    std::vector<double> w(count, 1.0);
    if (cv <= 0.0) return w;
    std::gamma_distribution<double> gamma(1.0 / (cv * cv), cv * cv);
    for (double& x : w) x = gamma(engine);
    return w;
}

// Calls emit(i) for each i in [0, count) independently with probability p,
// skipping geometrically so the cost is proportional to the output.
template <class Emit>
void sample_bernoulli(std::uint64_t count, double p, Rng& rng, Emit&& emit) {
    if (p <= 0.0 || count == 0) return;
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < count; ++i) emit(i);
        return;
    }
    const double log_q = std::log1p(-p);
    double pos = -1.0;
    for (;;) {
        const double u = 1.0 - rng.uniform01(); // (0, 1]
        pos += std::floor(std::log(u) / log_q) + 1.0;
        if (pos >= static_cast<double>(count)) return;
        emit(static_cast<std::uint64_t>(pos));
    }
}

} // namespace

GeneratedInstance generate(const GeneratorParams& params) {
    params.validate();
    const std::size_t n = params.num_vertices();
    Rng rng(params.seed);

    std::vector<vertex_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(std::span<vertex_t>(label));
    const std::span<const vertex_t> left(label.data(), params.n_left);
    const std::span<const vertex_t> right(label.data() + params.n_left, params.n_right);
    const std::span<const vertex_t> both(label.data(), params.n_left + params.n_right);
    const std::span<const vertex_t> oct(label.data() + params.n_left + params.n_right, params.n_oct);

    GeneratedInstance inst;
    inst.params = params;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.expected_edges() * 1.05) + 16);

    const std::vector<double> w_right = draw_weights(right.size(), params.cv_lr, rng.engine());
    for (std::size_t j = 0; j < right.size(); ++j) {
        double p = params.d_lr * w_right[j];
        if (p > 1.0) {
            p = 1.0;
            ++inst.clipped_weights;
        }
        sample_bernoulli(left.size(), p, rng, [&](std::uint64_t i) { edges.push_back({left[i], right[j]}); });
    }

    const std::vector<double> w_oct = draw_weights(oct.size(), params.cv_ob, rng.engine());
    for (std::size_t j = 0; j < oct.size(); ++j) {
        double p = params.d_ob * w_oct[j];
        if (p > 1.0) {
            p = 1.0;
            ++inst.clipped_weights;
        }
        sample_bernoulli(both.size(), p, rng, [&](std::uint64_t i) { edges.push_back({both[i], oct[j]}); });
    }

    // O–O pairs (a, b), a < b, enumerated row by row.
    const std::uint64_t k = oct.size();
    std::uint64_t row = 0;
    std::uint64_t row_start = 0; // linear index of (row, row + 1)
    sample_bernoulli(k * (k - (k > 0)) / 2, params.d_oo, rng, [&](std::uint64_t idx) {
        while (idx >= row_start + (k - 1 - row)) {
            row_start += k - 1 - row;
            ++row;
        }
        edges.push_back({oct[row], oct[row + 1 + (idx - row_start)]});
    });

    inst.graph = Graph::from_edges(n, edges);
    inst.prescribed = {VertexSet::from(n, oct), VertexSet::from(n, left), VertexSet::from(n, right)};
    return inst;
}

EmpiricalStats empirical_stats(const GeneratedInstance& inst) {
    const Graph& g = inst.graph;
    const OctDecomposition& d = inst.prescribed;
    EmpiricalStats s;
    s.m = g.num_edges();
    g.for_each_edge([&](vertex_t u, vertex_t v) {
        const bool ou = d.oct.contains(u), ov = d.oct.contains(v);
        if (ou && ov) {
            ++s.m_oo;
        } else if (ou || ov) {
            ++s.m_ob;
        } else if (d.left.contains(u) != d.left.contains(v)) {
            ++s.m_lr;
        } else {
            ++s.m_within_parts;
        }
    });
    const auto nl = static_cast<double>(d.left.size());
    const auto nr = static_cast<double>(d.right.size());
    const auto no = static_cast<double>(d.oct.size());
    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    s.density_lr = ratio(static_cast<double>(s.m_lr), nl * nr);
    s.density_ob = ratio(static_cast<double>(s.m_ob), no * (nl + nr));
    s.density_oo = ratio(static_cast<double>(s.m_oo), no * (no - 1.0) / 2.0);

    auto degree_cv = [&](const VertexSet& of, auto&& counts) {
        if (of.empty()) return 0.0;
        double sum = 0.0, sum_sq = 0.0;
        for (vertex_t v : of.members()) {
            double deg = 0.0;
            for (vertex_t w : g.neighbors(v)) deg += counts(w) ? 1.0 : 0.0;
            sum += deg;
            sum_sq += deg * deg;
        }
        const double mean = sum / static_cast<double>(of.size());
        const double var = std::max(0.0, sum_sq / static_cast<double>(of.size()) - mean * mean);
        return mean > 0.0 ? std::sqrt(var) / mean : 0.0;
    };
    s.degree_cv_lr = degree_cv(d.right, [&](vertex_t w) { return d.left.contains(w); });
    s.degree_cv_ob = degree_cv(d.oct, [&](vertex_t w) { return !d.oct.contains(w); });
    return s;
}

} // namespace sround
