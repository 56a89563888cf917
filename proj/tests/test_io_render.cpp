#include <doctest.h>

#include <regex>
#include <string>
#include <vector>

#include "schottky/constructions.hpp"
#include "schottky/io.hpp"
#include "schottky/render.hpp"
#include "test_support.hpp"

using namespace schottky;
using schottky::testing::near;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

double attr(const std::string& svg, const std::string& name) {
    const std::regex re(name + "=\"([-0-9.eE+]+)\"");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, re));
    return std::stod(m[1].str());
}

}  // namespace

TEST_CASE("render_svg element counts") {
    const SchottkySystem sys = standard_group(1, 1);
    const std::string svg = render_svg(sys, {0, 800});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count(svg, "<path class=\"circle\"") == 4);
    CHECK(count(svg, "<path class=\"axis\"") == 2);
    CHECK(count(svg, "class=\"limit-point\"") == 0);

    const SchottkySystem w = nonclassical_pair_example().witness;
    const std::string dots = render_svg(w, {4, 800});
    CHECK(count(dots, "class=\"limit-point\"") == 4 * 27);
    CHECK(dots == render_svg(w, {4, 800}));
}

TEST_CASE("render_svg geometry matches the viewport") {
    const SchottkySystem sys = standard_group(0, 3);
    const std::string svg = render_svg(sys, {0, 640});
    const Viewport vp{attr(svg, "data-x0"), attr(svg, "data-scale"), attr(svg, "data-baseline"), 640, 320};
    const Viewport fit = fit_viewport(sys, 640);
    CHECK(near(vp.x0, fit.x0, 1e-3));
    CHECK(near(vp.scale, fit.scale, 1e-3 * fit.scale));
    std::vector<double> feet;
    const std::regex re("<path class=\"circle\" d=\"M ([-0-9.]+) [-0-9.]+ A [-0-9.]+ [-0-9.]+ 0 0 1 ([-0-9.]+) ");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        feet.push_back(std::stod((*it)[1].str()));
        feet.push_back(std::stod((*it)[2].str()));
    }
    REQUIRE(feet.size() == 4 * sys.pairs.size());
    std::size_t k = 0;
    for (const auto& p : sys.pairs) {
        for (const auto& c : {p.source, p.target}) {
            CHECK(near(feet[k++], fit.to_svg_x(c.left()), 0.5));
            CHECK(near(feet[k++], fit.to_svg_x(c.right()), 0.5));
            CHECK(near(vp.from_svg_x(feet[k - 1]), c.right(), 0.5 / fit.scale));
        }
    }
}

TEST_CASE("render_svg on a violating system marks the pair") {
    SchottkySystem sys = standard_group(0, 2);
    sys.pairs[0].target = sys.pairs[1].source;
    const std::string svg = render_svg(sys, {3, 400});
    CHECK(count(svg, "#d62728") >= 2);
    CHECK(count(svg, "class=\"limit-point\"") == 0);
    CHECK_THROWS_AS(render_svg(SchottkySystem{}, {}), Error);
}

TEST_CASE("JSON round trip") {
    const SchottkySystem sys = standard_group(1, 2);
    const io::json j = io::to_json(sys, 1e-9);
    const io::GroupFile g = io::group_from_json(io::json::parse(j.dump()));
    CHECK(g.tol == 1e-9);
    REQUIRE(g.generators.size() == sys.generators.size());
    const SchottkySystem back = g.system();
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        CHECK(back.generators[i].approx_equal(sys.generators[i], 1e-12));
        CHECK(back.pairs[i].source.center() == sys.pairs[i].source.center());
        CHECK(back.pairs[i].target.radius() == sys.pairs[i].target.radius());
    }
    CHECK(io::point_from_json("inf").is_infinity());
    CHECK(io::to_json(BoundaryPoint::infinity()) == "inf");
    CHECK(near(io::point_from_json(io::json(2.5)).value(), 2.5, 1e-15));
    CHECK(io::format_real(0.1) == "0.1");
    CHECK_THROWS_AS(io::group_from_json(io::json::parse(R"({"generators":[[1,2,3]]})")), Error);
}

TEST_CASE("limit_set_csv") {
    const auto samples = limit_set_sample(standard_group(0, 2), 1);
    const std::string csv = io::limit_set_csv(samples);
    CHECK(csv.rfind("word,point,center,radius\n", 0) == 0);
    CHECK(count(csv, "\n") == samples.size() + 1);
}
