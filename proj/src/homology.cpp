#include "tvb/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tvb {

MatrixModP boundary_matrix(const SimplicialComplex& K, int k, uint16_t p) {
    ModP m(p);
    if (k < 0 || k > K.dim())
        throw std::out_of_range("boundary_matrix: k out of range");
    int cols = K.face_count(k);
    if (k == 0) {
        MatrixModP M(p, 1, cols);
        for (int j = 0; j < cols; ++j) M.at(0, j) = 1;
        return M;
    }
    const auto& below = K.faces_by_dim[k - 1];
    MatrixModP M(p, static_cast<int>(below.size()), cols);
    Simplex sub;
    sub.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = K.faces_by_dim[k][j];
        for (int i = 0; i <= k; ++i) {
            sub.clear();
            for (int t = 0; t <= k; ++t)
                if (t != i) sub.push_back(s[t]);
            auto it = std::lower_bound(below.begin(), below.end(), sub);
            int row = static_cast<int>(it - below.begin());
            M.at(row, j) = (i % 2 == 0) ? 1 : static_cast<uint16_t>(p - 1);
        }
    }
    return M;
}

int rank_mod_p(MatrixModP M) {
    ModP m(M.p);
    int rank = 0;
    for (int col = 0; col < M.cols && rank < M.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < M.rows; ++i)
            if (M.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            std::swap_ranges(&M.at(piv, col), &M.at(piv, col) + (M.cols - col),
                             &M.at(rank, col));
        uint16_t lead = M.at(rank, col);
        if (lead != 1)
            row_scale(&M.at(rank, col), static_cast<std::size_t>(M.cols - col),
                      mod_inverse(lead, m), m);
        for (int i = rank + 1; i < M.rows; ++i) {
            uint16_t v = M.at(i, col);
            if (!v) continue;
            row_addmul(&M.at(i, col), &M.at(rank, col),
                       static_cast<std::size_t>(M.cols - col),
                       static_cast<uint16_t>(M.p - v), m);
        }
        ++rank;
    }
    return rank;
}

std::vector<long long> BettiProfile::trimmed() const {
    std::vector<long long> out = reduced_betti;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BettiProfile betti_numbers(const SimplicialComplex& K, uint16_t p) {
    if (K.empty()) throw std::invalid_argument("betti_numbers: empty complex");
    int dim = K.dim();
    std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);
    for (int k = 0; k <= dim; ++k) rank[k] = rank_mod_p(boundary_matrix(K, k, p));
    BettiProfile out;
    out.p = p;
    out.reduced_betti.resize(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k)
        out.reduced_betti[k] = K.face_count(k) - rank[k] - rank[k + 1];
    return out;
}

ConnectivityResult homological_connectivity(const SimplicialComplex& K,
                                            uint16_t p) {
    if (K.empty())
        throw std::invalid_argument("homological_connectivity: empty complex");
    int dim = K.dim();
    int rank_prev = rank_mod_p(boundary_matrix(K, 0, p));
    for (int k = 0; k <= dim; ++k) {
        int rank_next = (k == dim) ? 0 : rank_mod_p(boundary_matrix(K, k + 1, p));
        long long b = K.face_count(k) - rank_prev - rank_next;
        if (b != 0) return {k - 1, false};
        rank_prev = rank_next;
    }
    return {dim, true};
}

}  // namespace tvb
