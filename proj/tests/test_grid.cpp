#include "sround/errors.hpp"
#include "sround/grid.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace sround;

TEST_CASE("synthetic preset") {
    const Grid g = parse_grid(*grid_preset("synthetic"));
    CHECK(g.points().size() == 4 * 3 * 2 * 3 * 5 * 2);
    CHECK(g.target_m == std::vector<std::size_t>{100000});
    std::set<std::string> ids;
    for (const GridPoint& p : g.points()) {
        CHECK(p.cv_lr == p.cv_ob);
        ids.insert(p.id(100000));
    }
    CHECK(ids.size() == g.points().size());
}

TEST_CASE("large preset row count") {
    const Grid g = load_grid("large");
    CHECK(g.points().size() == g.ratio_lr.size() * g.d_oo.size() * g.d_ob.size() * g.d_lr.size() *
                                   g.oct_frac.size() * g.cv_ob.size());
    CHECK(g.points().size() == 60);
    CHECK(g.target_m.size() == 2);
}

TEST_CASE("shipped preset files match the built-in text") {
    for (std::string_view name : grid_preset_names()) {
        std::ifstream in(std::string(SROUND_SOURCE_DIR) + "/presets/" + std::string(name) + ".grid");
        REQUIRE(in);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == *grid_preset(name));
    }
}

TEST_CASE("point ids and params") {
    GridPoint p{10, 0.1, 0.005, 0.05, 0.01, 1.5, 1.5};
    CHECK(p.id(100000) == "m100000_r10_f0.1_lr0.005_ob0.05_oo0.01_cvl1.5_cvo1.5");
    const GeneratorParams gp = p.params(100000, 7);
    CHECK(gp.seed == 7);
    CHECK(gp.cv_lr == 1.5);
    CHECK(std::abs(gp.expected_edges() - 100000) <= 1000);
}

TEST_CASE("independent cv_lr and enumeration order") {
    const Grid g = parse_grid("ratio = 1\noct_frac = 0.1\nd_lr = 0.01\nd_ob = 0.01\nd_oo = 0.01, 0.05\n"
                              "cv = 0.5\ncv_lr = 0, 1\nseeds = 3\n");
    const auto pts = g.points();
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].d_oo == 0.01);
    CHECK(pts[0].cv_lr == 0);
    CHECK(pts[1].cv_lr == 1);
    CHECK(pts[2].d_oo == 0.05);
    CHECK(g.seeds_per_point == 3);
    CHECK(g.target_m.empty());
}

TEST_CASE("grid parse errors") {
    auto line_of = [](const char* text) {
        try {
            parse_grid(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return std::size_t{999};
    };
    const char* rest = "oct_frac = 0.1\nd_lr = 0.01\nd_ob = 0.01\nd_oo = 0.01\ncv = 0\n";
    CHECK(line_of((std::string("ratio = 1, x\n") + rest).c_str()) == 1);
    CHECK(line_of((std::string("ratio = 1\nratio = 2\n") + rest).c_str()) == 2);
    CHECK(line_of((std::string("ratio = 1\n") + rest + "colour = red\n").c_str()) == 7);
    CHECK(line_of((std::string("ratio 1\n") + rest).c_str()) == 1);
    CHECK(line_of((std::string("ratio = 1\n") + rest + "seeds = 1, 2\n").c_str()) == 7);
    CHECK(line_of(rest) == 0);
    CHECK_THROWS_AS(load_grid("/nonexistent/grid"), io_error);
}
