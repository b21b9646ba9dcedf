#pragma once

#include <optional>
#include <vector>

#include "tvb/rational.hpp"
#include "tvb/simplicial_complex.hpp"

namespace tvb {

// Vertex placements of an affine map into R^d; point k realizes vertex k.
struct PointConfiguration {
    int d = 1;
    std::vector<Point> points;

    void validate() const;
};

struct LpResult {
    bool feasible = false;
    std::vector<Rational> x;
};

// Decides {x >= 0 : Ax = b} exactly. Phase-one simplex with Bland's rule;
// deterministic for a fixed input ordering.
LpResult lp_feasible(std::vector<std::vector<Rational>> A,
                     std::vector<Rational> b, int nonneg_vars);

struct IntersectionResult {
    bool feasible = false;
    std::optional<Point> witness;
    // Barycentric weights per face, vertex order matching each face.
    std::optional<std::vector<std::vector<Rational>>> weights;
};

// Exact decision whether the convex hulls of the r faces share a point.
// LP variables are per-face barycentric weights in face-then-vertex order.
IntersectionResult hulls_intersect(const PointConfiguration& config,
                                   const std::vector<Simplex>& faces);

struct JoinMapResult {
    std::vector<Rational> coords;  // r blocks of (mix_j, mix_j * f(x_j))
    bool on_diagonal = false;      // all blocks equal
};

JoinMapResult join_map_eval(const PointConfiguration& config,
                            const std::vector<Simplex>& faces,
                            const std::vector<std::vector<Rational>>& weights,
                            const std::vector<Rational>& mix);

}  // namespace tvb
