#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "tvb/rational.hpp"
#include "tvb/search.hpp"
#include "tvb/svg.hpp"

using tvb::Instance;
using tvb::RainbowPartition;
using tvb::Rational;

namespace {

Instance plane_instance() {
    Instance inst;
    inst.d = 2;
    inst.r = 2;
    inst.coloring.m = 2;
    inst.coloring.color_of = {0, 0, 1, 1, 0};
    inst.caps.caps = {2, 2};
    tvb::PointConfiguration cfg;
    cfg.d = 2;
    cfg.points = {{0, 0}, {4, 0}, {2, 3}, {2, -1}, {Rational(1, 3), 1}};
    inst.config = std::move(cfg);
    return inst;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("plain instance figure lists one dot per point") {
    Instance inst = plane_instance();
    std::string svg = tvb::emit_svg(inst, std::nullopt);
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    CHECK(svg.find("viewBox=\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<circle") == 5);
    CHECK(count_occurrences(svg, "r=\"4\"") == 5);
    CHECK(svg.find("<polygon") == std::string::npos);
    CHECK(svg.find("#e41a1c") != std::string::npos);  // color 1 dots
    CHECK(svg.find("#377eb8") != std::string::npos);  // color 2 dots
    CHECK(count_occurrences(svg, "</svg>\n") == 1);
    // y flipped: point (2, 3) renders at y = -3
    CHECK(svg.find("cx=\"2.000\" cy=\"-3.000\"") != std::string::npos);
    // exact thirds round to three decimals
    CHECK(svg.find("cx=\"0.333\"") != std::string::npos);
}

TEST_CASE("faces render by size with the witness cross on top") {
    Instance inst = plane_instance();
    RainbowPartition part;
    part.faces = {{0, 2, 3}, {1, 4}};
    part.witness = tvb::Point{2, 1};
    std::string svg = tvb::emit_svg(inst, part);
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "fill-opacity=\"0.3\"") == 1);
    CHECK(count_occurrences(svg, "stroke-opacity=\"0.3\"") == 1);  // the pair face
    CHECK(count_occurrences(svg, "stroke=\"#000000\"") == 2);  // two cross arms
    // cross is centered on the (y-flipped) witness
    CHECK(svg.find("x1=\"-4.000\" y1=\"-1.000\" x2=\"8.000\" y2=\"-1.000\"") !=
          std::string::npos);
    // faces precede points, points precede the cross
    CHECK(svg.find("<polygon") < svg.find("r=\"4\""));
    CHECK(svg.rfind("r=\"4\"") < svg.find("stroke=\"#000000\""));

    RainbowPartition dots;
    dots.faces = {{0}, {2}};
    std::string dotsvg = tvb::emit_svg(inst, dots);
    CHECK(count_occurrences(dotsvg, "r=\"6\"") == 2);
}

TEST_CASE("figures are byte-identical across calls") {
    Instance inst = plane_instance();
    RainbowPartition part;
    part.faces = {{0, 2, 3}, {1, 4}};
    part.witness = tvb::Point{2, 1};
    CHECK(tvb::emit_svg(inst, part) == tvb::emit_svg(inst, part));
    CHECK(tvb::emit_svg(inst, std::nullopt) == tvb::emit_svg(inst, std::nullopt));
}

TEST_CASE("degenerate extents fall back to a unit margin") {
    Instance inst;
    inst.d = 2;
    inst.r = 2;
    inst.coloring.m = 1;
    inst.coloring.color_of = {0, 0};
    inst.caps.caps = {2};
    tvb::PointConfiguration cfg;
    cfg.d = 2;
    cfg.points = {{5, 5}, {5, 5}};
    inst.config = std::move(cfg);
    std::string svg = tvb::emit_svg(inst, std::nullopt);
    CHECK(svg.find("viewBox=\"4.000 -6.000 2.000 2.000\"") != std::string::npos);
}

TEST_CASE("emit_svg rejects unusable instances") {
    Instance inst = plane_instance();
    inst.config.reset();
    CHECK_THROWS_AS(tvb::emit_svg(inst, std::nullopt), std::invalid_argument);

    Instance line;
    line.d = 1;
    line.r = 2;
    line.coloring.m = 1;
    line.coloring.color_of = {0, 0};
    line.caps.caps = {2};
    tvb::PointConfiguration cfg;
    cfg.d = 1;
    cfg.points = {{0}, {1}};
    line.config = std::move(cfg);
    CHECK_THROWS_AS(tvb::emit_svg(line, std::nullopt), std::invalid_argument);

    Instance inst2 = plane_instance();
    RainbowPartition bad;
    bad.faces = {{0}, {1}};
    bad.witness = tvb::Point{1};  // wrong dimension
    CHECK_THROWS_AS(tvb::emit_svg(inst2, bad), std::invalid_argument);
}
