#include "tvb/geometry.hpp"

#include <set>
#include <stdexcept>

namespace tvb {

void PointConfiguration::validate() const {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (points.empty()) throw std::invalid_argument("need at least one point");
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != d)
            throw std::invalid_argument("point has wrong coordinate count");
}

LpResult lp_feasible(std::vector<std::vector<Rational>> A,
                     std::vector<Rational> b, int nonneg_vars) {
    std::size_t mrows = A.size();
    if (b.size() != mrows)
        throw std::invalid_argument("lp_feasible: row count mismatch");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != nonneg_vars)
            throw std::invalid_argument("lp_feasible: column count mismatch");

    for (std::size_t i = 0; i < mrows; ++i)
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    int n = nonneg_vars;
    int total = n + static_cast<int>(mrows);
    int rhs = total;

    // Tableau rows for Ax + Ia = b with the artificials basic; the objective
    // row carries the reduced costs of w = sum of artificials and -w in the
    // rhs slot, so feasibility is exactly a zero rhs at termination.
    std::vector<std::vector<Rational>> T(
        mrows, std::vector<Rational>(static_cast<std::size_t>(total) + 1, 0));
    std::vector<int> basis(mrows);
    for (std::size_t i = 0; i < mrows; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + static_cast<int>(i)] = 1;
        T[i][rhs] = b[i];
        basis[i] = n + static_cast<int>(i);
    }
    std::vector<Rational> z(static_cast<std::size_t>(total) + 1, 0);
    for (std::size_t i = 0; i < mrows; ++i) {
        for (int j = 0; j < n; ++j) z[j] -= T[i][j];
        z[rhs] -= T[i][rhs];
    }

    for (;;) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best;
        for (std::size_t i = 0; i < mrows; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][rhs] / T[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave]))
                best = ratio, leave = static_cast<int>(i);
        }
        if (leave < 0)
            throw std::logic_error("lp_feasible: unbounded phase-one descent");

        Rational piv = T[leave][enter];
        for (int j = 0; j <= total; ++j) T[leave][j] /= piv;
        for (std::size_t i = 0; i < mrows; ++i) {
            if (static_cast<int>(i) == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (int j = 0; j <= total; ++j) z[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    LpResult out;
    out.feasible = (z[rhs] == 0);
    if (out.feasible) {
        out.x.assign(n, 0);
        for (std::size_t i = 0; i < mrows; ++i)
            if (basis[i] < n) out.x[basis[i]] = T[i][rhs];
    }
    return out;
}

IntersectionResult hulls_intersect(const PointConfiguration& config,
                                   const std::vector<Simplex>& faces) {
    config.validate();
    if (faces.empty()) throw std::invalid_argument("no faces given");
    std::set<int> seen;
    for (const auto& f : faces) {
        if (f.empty()) throw std::invalid_argument("empty face");
        for (int v : f) {
            if (v < 0 || v >= static_cast<int>(config.points.size()))
                throw std::invalid_argument("face vertex id out of range");
            if (!seen.insert(v).second)
                throw std::invalid_argument("faces overlap");
        }
    }

    int r = static_cast<int>(faces.size());
    int d = config.d;
    std::vector<int> offset(r + 1, 0);
    for (int j = 0; j < r; ++j)
        offset[j + 1] = offset[j] + static_cast<int>(faces[j].size());
    int nvars = offset[r];

    int nrows = r + (r - 1) * d;
    std::vector<std::vector<Rational>> A(
        static_cast<std::size_t>(nrows),
        std::vector<Rational>(static_cast<std::size_t>(nvars), 0));
    std::vector<Rational> b(static_cast<std::size_t>(nrows), 0);

    for (int j = 0; j < r; ++j) {
        for (int t = 0; t < static_cast<int>(faces[j].size()); ++t)
            A[j][offset[j] + t] = 1;
        b[j] = 1;
    }
    int row = r;
    for (int j = 1; j < r; ++j)
        for (int c = 0; c < d; ++c, ++row) {
            for (int t = 0; t < static_cast<int>(faces[0].size()); ++t)
                A[row][offset[0] + t] = config.points[faces[0][t]][c];
            for (int t = 0; t < static_cast<int>(faces[j].size()); ++t)
                A[row][offset[j] + t] = -config.points[faces[j][t]][c];
        }

    LpResult lp = lp_feasible(std::move(A), std::move(b), nvars);
    IntersectionResult out;
    out.feasible = lp.feasible;
    if (!lp.feasible) return out;

    std::vector<std::vector<Rational>> weights(r);
    for (int j = 0; j < r; ++j)
        weights[j].assign(lp.x.begin() + offset[j], lp.x.begin() + offset[j + 1]);
    Point w(static_cast<std::size_t>(d), 0);
    for (int t = 0; t < static_cast<int>(faces[0].size()); ++t)
        for (int c = 0; c < d; ++c)
            w[c] += weights[0][t] * config.points[faces[0][t]][c];
    out.witness = std::move(w);
    out.weights = std::move(weights);
    return out;
}

JoinMapResult join_map_eval(const PointConfiguration& config,
                            const std::vector<Simplex>& faces,
                            const std::vector<std::vector<Rational>>& weights,
                            const std::vector<Rational>& mix) {
    config.validate();
    int r = static_cast<int>(faces.size());
    if (static_cast<int>(weights.size()) != r ||
        static_cast<int>(mix.size()) != r)
        throw std::invalid_argument("join_map_eval: arity mismatch");
    Rational mixsum = 0;
    for (const auto& l : mix) {
        if (l < 0) throw std::invalid_argument("join_map_eval: negative mix");
        mixsum += l;
    }
    if (mixsum != 1) throw std::invalid_argument("join_map_eval: mix must sum to 1");

    int d = config.d;
    JoinMapResult out;
    out.coords.assign(static_cast<std::size_t>(r) * (d + 1), 0);
    std::vector<Point> facepts(r);
    for (int j = 0; j < r; ++j) {
        if (weights[j].size() != faces[j].size())
            throw std::invalid_argument("join_map_eval: weight count mismatch");
        Rational s = 0;
        Point fp(static_cast<std::size_t>(d), 0);
        for (std::size_t t = 0; t < weights[j].size(); ++t) {
            const Rational& l = weights[j][t];
            if (l < 0)
                throw std::invalid_argument("join_map_eval: negative weight");
            s += l;
            int v = faces[j][t];
            if (v < 0 || v >= static_cast<int>(config.points.size()))
                throw std::invalid_argument("join_map_eval: vertex out of range");
            for (int c = 0; c < d; ++c) fp[c] += l * config.points[v][c];
        }
        if (s != 1)
            throw std::invalid_argument("join_map_eval: weights must sum to 1");
        facepts[j] = std::move(fp);
        out.coords[static_cast<std::size_t>(j) * (d + 1)] = mix[j];
        for (int c = 0; c < d; ++c)
            out.coords[static_cast<std::size_t>(j) * (d + 1) + 1 + c] =
                mix[j] * facepts[j][c];
    }
    out.on_diagonal = true;
    for (int j = 1; j < r && out.on_diagonal; ++j)
        for (int c = 0; c <= d; ++c)
            if (out.coords[static_cast<std::size_t>(j) * (d + 1) + c] !=
                out.coords[c]) {
                out.on_diagonal = false;
                break;
            }
    return out;
}

}  // namespace tvb
