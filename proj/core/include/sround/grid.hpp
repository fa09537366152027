#pragma once

#include "sround/generator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sround {

/// One combination of generator proportions; sizes are resolved later from
/// a target edge count.
struct GridPoint {
    double ratio_lr = 1.0;
    double oct_frac = 0.0;
    double d_lr = 0.0;
    double d_ob = 0.0;
    double d_oo = 0.0;
    double cv_lr = 0.0;
    double cv_ob = 0.0;

    /// Stable identifier encoding every value, e.g. "m100000_r10_f0.1_lr0.005_ob0.05_oo0.01_cvl1.5_cvo1.5".
    std::string id(std::size_t target_m) const;
    GeneratorParams params(std::size_t target_m, std::uint64_t seed) const;
};

/// Parameter grid read from a key = value-list file:
///
///     ratio    = 1, 2, 10, 100
///     oct_frac = 0.01, 0.05
///     d_lr = ...; d_ob = ...; d_oo = ...
///     cv       = 0.5, 1.5        # sets cv_lr and cv_ob together
///     cv_lr    = ...             # optional, varies cv_lr independently
///     target_m = 100000          # optional default sizes
///     seeds    = 1               # optional seeds per point
///
/// '#' starts a comment. Points enumerate ratio, d_oo, d_ob, d_lr,
/// oct_frac, cv_ob, cv_lr with the last varying fastest.
struct Grid {
    std::vector<double> ratio_lr, oct_frac, d_lr, d_ob, d_oo, cv_ob;
    std::optional<std::vector<double>> cv_lr; ///< empty: tied to cv_ob
    std::vector<std::size_t> target_m;
    std::size_t seeds_per_point = 1;

    std::vector<GridPoint> points() const;
};

Grid parse_grid(std::string_view text);

/// A preset name ("synthetic", "large") or a path to a grid file.
Grid load_grid(const std::string& name_or_path);

/// Text of a named preset, or nullopt.
std::optional<std::string_view> grid_preset(std::string_view name) noexcept;
std::vector<std::string_view> grid_preset_names();

} // namespace sround
