#include "sround/grid.hpp"

#include "sround/errors.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sround {

namespace {

// Full synthetic grid: every combination of the standard generator settings.
constexpr std::string_view synthetic_preset = R"(# full synthetic parameter grid
ratio    = 1, 2, 10, 100
d_oo     = 0.001, 0.01, 0.05
d_ob     = 0.01, 0.05
d_lr     = 0.001, 0.005, 0.01
oct_frac = 0.01, 0.05, 0.1, 0.25, 0.4
cv       = 0.5, 1.5
target_m = 100000
seeds    = 1
)";

// Pared-down grid used for the larger graphs: ratio 2 dropped, the two
// extreme O-densities kept, O–B and L–R densities fixed.
constexpr std::string_view large_preset = R"(# pared-down grid for large graphs
ratio    = 1, 10, 100
d_oo     = 0.001, 0.05
d_ob     = 0.01
d_lr     = 0.005
oct_frac = 0.01, 0.05, 0.1, 0.25, 0.4
cv       = 0.5, 1.5
target_m = 40000000, 200000000
seeds    = 1
)";

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    while (true) {
        const std::size_t comma = value.find(',');
        out.emplace_back(trim(value.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
    }
    return out;
}

double to_double(const std::string& tok, std::size_t line) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE) {
        throw parse_error("bad number '" + tok + "'", line);
    }
    return v;
}

std::size_t to_count(const std::string& tok, std::size_t line) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (tok.empty() || tok.front() == '-' || end != tok.c_str() + tok.size() || errno == ERANGE) {
        throw parse_error("bad count '" + tok + "'", line);
    }
    return static_cast<std::size_t>(v);
}

} // namespace

std::string GridPoint::id(std::size_t target_m) const {
    return "m" + std::to_string(target_m) + "_r" + format_value(ratio_lr) + "_f" + format_value(oct_frac) + "_lr" +
           format_value(d_lr) + "_ob" + format_value(d_ob) + "_oo" + format_value(d_oo) + "_cvl" +
           format_value(cv_lr) + "_cvo" + format_value(cv_ob);
}

GeneratorParams GridPoint::params(std::size_t target_m, std::uint64_t seed) const {
    const PartSizes s = resolve_sizes(ratio_lr, oct_frac, d_lr, d_ob, d_oo, target_m);
    GeneratorParams p;
    p.n_left = s.n_left;
    p.n_right = s.n_right;
    p.n_oct = s.n_oct;
    p.d_lr = d_lr;
    p.d_ob = d_ob;
    p.d_oo = d_oo;
    p.cv_lr = cv_lr;
    p.cv_ob = cv_ob;
    p.seed = seed;
    return p;
}

std::vector<GridPoint> Grid::points() const {
    std::vector<GridPoint> out;
    const std::vector<double> tied{-1.0};
    const std::vector<double>& cvl = cv_lr ? *cv_lr : tied;
    for (double r : ratio_lr)
        for (double oo : d_oo)
            for (double ob : d_ob)
                for (double lr : d_lr)
                    for (double f : oct_frac)
                        for (double co : cv_ob)
                            for (double cl : cvl) out.push_back({r, f, lr, ob, oo, cv_lr ? cl : co, co});
    return out;
}

Grid parse_grid(std::string_view text) {
    Grid g;
    bool have[6] = {};
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw parse_error("expected 'key = values'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::vector<std::string> values = split_list(line.substr(eq + 1));

        auto reals = [&] {
            std::vector<double> out;
            for (const auto& v : values) out.push_back(to_double(v, line_no));
            return out;
        };
        auto set = [&](std::vector<double>& dst, int slot) {
            if (have[slot]) throw parse_error("key '" + key + "' given twice", line_no);
            have[slot] = true;
            dst = reals();
        };
        if (key == "ratio") {
            set(g.ratio_lr, 0);
        } else if (key == "oct_frac") {
            set(g.oct_frac, 1);
        } else if (key == "d_lr") {
            set(g.d_lr, 2);
        } else if (key == "d_ob") {
            set(g.d_ob, 3);
        } else if (key == "d_oo") {
            set(g.d_oo, 4);
        } else if (key == "cv" || key == "cv_ob") {
            set(g.cv_ob, 5);
        } else if (key == "cv_lr") {
            if (g.cv_lr) throw parse_error("key 'cv_lr' given twice", line_no);
            g.cv_lr = reals();
        } else if (key == "target_m") {
            g.target_m.clear();
            for (const auto& v : values) g.target_m.push_back(to_count(v, line_no));
        } else if (key == "seeds") {
            if (values.size() != 1) throw parse_error("'seeds' takes one count", line_no);
            g.seeds_per_point = to_count(values[0], line_no);
        } else {
            throw parse_error("unknown key '" + key + "'", line_no);
        }
    }
    static constexpr const char* names[] = {"ratio", "oct_frac", "d_lr", "d_ob", "d_oo", "cv"};
    for (int i = 0; i < 6; ++i) {
        if (!have[i]) throw parse_error(std::string("grid is missing '") + names[i] + "'", 0);
    }
    return g;
}

std::optional<std::string_view> grid_preset(std::string_view name) noexcept {
    if (name == "synthetic") return synthetic_preset;
    if (name == "large") return large_preset;
    return std::nullopt;
}

std::vector<std::string_view> grid_preset_names() { return {"synthetic", "large"}; }

Grid load_grid(const std::string& name_or_path) {
    if (const auto preset = grid_preset(name_or_path)) return parse_grid(*preset);
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) throw io_error("no grid preset or file named '" + name_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_grid(buf.str());
    } catch (const parse_error& e) {
        throw parse_error(name_or_path + ": " + e.what(), 0);
    }
}

} // namespace sround
