#pragma once

// Reference rank over F_p, written independently of the library kernels:
// plain int arithmetic with %, inverse by exhaustive search.

#include <vector>

namespace ref {

inline int inv_mod(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

inline int rank_mod_p(std::vector<std::vector<int>> M, int p) {
    if (M.empty()) return 0;
    int rows = static_cast<int>(M.size());
    int cols = static_cast<int>(M[0].size());
    for (auto& row : M)
        for (auto& v : row) v = ((v % p) + p) % p;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (M[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        int inv = inv_mod(M[rank][col], p);
        for (int j = col; j < cols; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            int f = M[i][col];
            for (int j = col; j < cols; ++j)
                M[i][j] = ((M[i][j] - f * M[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace ref
