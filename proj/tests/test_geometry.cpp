#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "gen.hpp"
#include "hull_oracle.hpp"
#include "tvb/geometry.hpp"
#include "tvb/rng.hpp"

using tvb::Point;
using tvb::PointConfiguration;
using tvb::Rational;
using tvb::Simplex;

namespace {

PointConfiguration config2(std::vector<Point> pts) {
    PointConfiguration c;
    c.d = 2;
    c.points = std::move(pts);
    return c;
}

}  // namespace

TEST_CASE("lp_feasible on hand-built systems") {
    // x1 + x2 = 1
    auto one = tvb::lp_feasible({{1, 1}}, {1}, 2);
    REQUIRE(one.feasible);
    CHECK(one.x[0] + one.x[1] == 1);
    CHECK(one.x[0] >= 0);
    CHECK(one.x[1] >= 0);

    // x = -1 has no nonnegative solution
    CHECK_FALSE(tvb::lp_feasible({{1}}, {-1}, 1).feasible);

    // -x = -3 must normalize the negative rhs
    auto three = tvb::lp_feasible({{-1}}, {-3}, 1);
    REQUIRE(three.feasible);
    CHECK(three.x[0] == 3);

    // x1 - x2 = 0 and x1 + x2 = 2
    auto pair = tvb::lp_feasible({{1, -1}, {1, 1}}, {0, 2}, 2);
    REQUIRE(pair.feasible);
    CHECK(pair.x[0] == 1);
    CHECK(pair.x[1] == 1);

    // inconsistent rows
    CHECK_FALSE(tvb::lp_feasible({{1}, {1}}, {1, 2}, 1).feasible);

    // fractional data stays exact
    auto frac = tvb::lp_feasible({{Rational(1, 3)}}, {Rational(1, 7)}, 1);
    REQUIRE(frac.feasible);
    CHECK(frac.x[0] == Rational(3, 7));

    CHECK_THROWS_AS(tvb::lp_feasible({{1}}, {1, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(tvb::lp_feasible({{1, 2}}, {1}, 1), std::invalid_argument);
}

TEST_CASE("lp_feasible certifies random solvable systems exactly") {
    tvb::SplitMix64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = static_cast<int>(rng.uniform(1, 4));
        int cols = static_cast<int>(rng.uniform(1, 5));
        std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols));
        for (auto& row : A)
            for (auto& v : row) v = Rational(rng.uniform(-9, 9));
        std::vector<Rational> x0(cols);
        for (auto& v : x0) {
            v = Rational(rng.uniform(0, 9), rng.uniform(1, 4));
            v.canonicalize();
        }
        std::vector<Rational> b(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) b[i] += A[i][j] * x0[j];
        auto res = tvb::lp_feasible(A, b, cols);
        REQUIRE(res.feasible);
        for (int i = 0; i < rows; ++i) {
            Rational lhs = 0;
            for (int j = 0; j < cols; ++j) lhs += A[i][j] * res.x[j];
            CHECK(lhs == b[i]);
        }
        for (const auto& v : res.x) CHECK(v >= 0);
    }
}

TEST_CASE("crossing segments meet in their midpoint") {
    auto cfg = config2({{0, 0}, {2, 2}, {0, 2}, {2, 0}});
    auto res = tvb::hulls_intersect(cfg, {{0, 1}, {2, 3}});
    REQUIRE(res.feasible);
    REQUIRE(res.witness.has_value());
    CHECK((*res.witness)[0] == 1);
    CHECK((*res.witness)[1] == 1);
    REQUIRE(res.weights.has_value());
    CHECK((*res.weights)[0] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("disjoint hulls are infeasible") {
    auto cfg = config2({{0, 0}, {1, 0}, {5, 5}, {6, 5}});
    auto res = tvb::hulls_intersect(cfg, {{0, 1}, {2, 3}});
    CHECK_FALSE(res.feasible);
    CHECK_FALSE(res.witness.has_value());
    CHECK_FALSE(res.weights.has_value());
}

TEST_CASE("touching at a shared endpoint counts as intersecting") {
    auto cfg = config2({{0, 0}, {1, 1}, {1, 1}, {2, 0}});
    auto res = tvb::hulls_intersect(cfg, {{0, 1}, {2, 3}});
    REQUIRE(res.feasible);
    CHECK(*res.witness == Point{1, 1});
}

TEST_CASE("point inside triangle, three ways") {
    auto cfg = config2({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
    CHECK(tvb::hulls_intersect(cfg, {{0, 1, 2}, {3}}).feasible);
    CHECK(tvb::hulls_intersect(cfg, {{3}, {0, 1, 2}}).feasible);
    auto far_cfg = config2({{0, 0}, {4, 0}, {0, 4}, {9, 9}});
    CHECK_FALSE(tvb::hulls_intersect(far_cfg, {{0, 1, 2}, {3}}).feasible);
}

TEST_CASE("three segments with a common point in d = 1") {
    PointConfiguration cfg;
    cfg.d = 1;
    cfg.points = {{0}, {4}, {1}, {5}, {2}, {6}};
    auto res = tvb::hulls_intersect(cfg, {{0, 1}, {2, 3}, {4, 5}});
    REQUIRE(res.feasible);
    CHECK((*res.witness)[0] >= 2);
    CHECK((*res.witness)[0] <= 4);
    cfg.points = {{0}, {1}, {2}, {3}, {4}, {5}};
    CHECK_FALSE(tvb::hulls_intersect(cfg, {{0, 1}, {2, 3}, {4, 5}}).feasible);
}

TEST_CASE("hulls_intersect validates its inputs") {
    auto cfg = config2({{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(tvb::hulls_intersect(cfg, {}), std::invalid_argument);
    CHECK_THROWS_AS(tvb::hulls_intersect(cfg, {{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(tvb::hulls_intersect(cfg, {{0}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(tvb::hulls_intersect(cfg, {{0, 1}, {1, 2}}),
                    std::invalid_argument);
    PointConfiguration ragged;
    ragged.d = 2;
    ragged.points = {{0, 0}, {1}};
    CHECK_THROWS_AS(tvb::hulls_intersect(ragged, {{0}, {1}}),
                    std::invalid_argument);
}

TEST_CASE("witness lies in every face hull with the returned weights") {
    tvb::SplitMix64 rng(52);
    int feasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto tf = ref::random_two_faces(rng, 2);
        auto res = tvb::hulls_intersect(tf.config, tf.faces);
        if (!res.feasible) continue;
        ++feasible_seen;
        REQUIRE(res.weights.has_value());
        REQUIRE(res.witness.has_value());
        for (std::size_t j = 0; j < tf.faces.size(); ++j) {
            const auto& w = (*res.weights)[j];
            REQUIRE(w.size() == tf.faces[j].size());
            Rational s = 0;
            Point pt(2, 0);
            for (std::size_t t = 0; t < w.size(); ++t) {
                CHECK(w[t] >= 0);
                s += w[t];
                for (int c = 0; c < 2; ++c)
                    pt[c] += w[t] * tf.config.points[tf.faces[j][t]][c];
            }
            CHECK(s == 1);
            CHECK(pt == *res.witness);
        }
    }
    CHECK(feasible_seen > 20);
}

TEST_CASE("intersection decision matches the orientation oracle in d = 2") {
    tvb::SplitMix64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        auto tf = ref::random_two_faces(rng, 2);
        std::vector<Point> A, B;
        for (int v : tf.faces[0]) A.push_back(tf.config.points[v]);
        for (int v : tf.faces[1]) B.push_back(tf.config.points[v]);
        bool want = ref::hulls_intersect_2d(A, B);
        bool got = tvb::hulls_intersect(tf.config, tf.faces).feasible;
        CAPTURE(trial);
        CHECK(got == want);
    }
}

TEST_CASE("intersection decision matches the interval oracle in d = 1") {
    tvb::SplitMix64 rng(54);
    for (int trial = 0; trial < 300; ++trial) {
        int r = static_cast<int>(rng.uniform(2, 4));
        PointConfiguration cfg;
        cfg.d = 1;
        std::vector<Simplex> faces;
        std::vector<std::vector<Point>> groups;
        int next = 0;
        for (int j = 0; j < r; ++j) {
            int sz = static_cast<int>(rng.uniform(1, 3));
            Simplex f;
            std::vector<Point> g;
            for (int t = 0; t < sz; ++t) {
                cfg.points.push_back(ref::rand_point(rng, 1, 6));
                g.push_back(cfg.points.back());
                f.push_back(next++);
            }
            faces.push_back(f);
            groups.push_back(g);
        }
        bool want = ref::intervals_intersect(groups);
        bool got = tvb::hulls_intersect(cfg, faces).feasible;
        CHECK(got == want);
    }
}

TEST_CASE("feasibility is invariant under affine maps") {
    tvb::SplitMix64 rng(55);
    for (int trial = 0; trial < 80; ++trial) {
        auto tf = ref::random_two_faces(rng, 2);
        bool before = tvb::hulls_intersect(tf.config, tf.faces).feasible;
        // unimodular shear plus translation
        Rational s(rng.uniform(-3, 3));
        Rational tx(rng.uniform(-10, 10)), ty(rng.uniform(-10, 10));
        PointConfiguration mapped;
        mapped.d = 2;
        for (const auto& p : tf.config.points)
            mapped.points.push_back({p[0] + s * p[1] + tx, p[1] + ty});
        CHECK(tvb::hulls_intersect(mapped, tf.faces).feasible == before);
    }
}

TEST_CASE("growing a face preserves feasibility") {
    tvb::SplitMix64 rng(56);
    for (int trial = 0; trial < 80; ++trial) {
        auto tf = ref::random_two_faces(rng, 2);
        if (!tvb::hulls_intersect(tf.config, tf.faces).feasible) continue;
        auto bigger = tf;
        bigger.config.points.push_back(ref::rand_point(rng, 2, 4));
        bigger.faces[trial % 2].push_back(
            static_cast<int>(bigger.config.points.size()) - 1);
        CHECK(tvb::hulls_intersect(bigger.config, bigger.faces).feasible);
    }
}

TEST_CASE("join_map_eval lays out blocks and flags the diagonal") {
    auto cfg = config2({{0, 0}, {2, 2}, {0, 2}, {2, 0}});
    std::vector<Simplex> faces{{0, 1}, {2, 3}};
    std::vector<std::vector<Rational>> w{{Rational(1, 2), Rational(1, 2)},
                                         {Rational(1, 2), Rational(1, 2)}};
    auto even = tvb::join_map_eval(cfg, faces, w, {Rational(1, 2), Rational(1, 2)});
    REQUIRE(even.coords.size() == 6);
    CHECK(even.coords == std::vector<Rational>{Rational(1, 2), Rational(1, 2),
                                               Rational(1, 2), Rational(1, 2),
                                               Rational(1, 2), Rational(1, 2)});
    CHECK(even.on_diagonal);

    // same mix but different face points: off the diagonal
    auto uneven = tvb::join_map_eval(cfg, faces, {{1, 0}, {0, 1}},
                                     {Rational(1, 2), Rational(1, 2)});
    CHECK_FALSE(uneven.on_diagonal);
    CHECK(uneven.coords[1] == 0);  // (1/2) * x of point 0

    // unequal mix leaves the diagonal even at the common point
    auto lopsided = tvb::join_map_eval(cfg, faces, w, {Rational(1, 3), Rational(2, 3)});
    CHECK_FALSE(lopsided.on_diagonal);
}

TEST_CASE("intersection witnesses map onto the diagonal") {
    tvb::SplitMix64 rng(57);
    int mapped = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto tf = ref::random_two_faces(rng, 2);
        auto res = tvb::hulls_intersect(tf.config, tf.faces);
        if (!res.feasible) continue;
        ++mapped;
        auto jm = tvb::join_map_eval(tf.config, tf.faces, *res.weights,
                                     {Rational(1, 2), Rational(1, 2)});
        CHECK(jm.on_diagonal);
    }
    CHECK(mapped > 10);
}

TEST_CASE("join_map_eval rejects malformed barycentric data") {
    auto cfg = config2({{0, 0}, {1, 0}});
    std::vector<Simplex> faces{{0}, {1}};
    std::vector<std::vector<Rational>> good{{1}, {1}};
    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(tvb::join_map_eval(cfg, faces, {{1}}, half),
                    std::invalid_argument);
    CHECK_THROWS_AS(tvb::join_map_eval(cfg, faces, good, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        tvb::join_map_eval(cfg, faces, {{Rational(1, 2)}, {1}}, half),
        std::invalid_argument);
    CHECK_THROWS_AS(tvb::join_map_eval(cfg, faces, {{2}, {-1}}, half),
                    std::invalid_argument);
    CHECK_THROWS_AS(tvb::join_map_eval(cfg, faces, good, {Rational(3, 4), Rational(3, 4)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        tvb::join_map_eval(cfg, faces, good, {Rational(3, 2), Rational(-1, 2)}),
        std::invalid_argument);
}
