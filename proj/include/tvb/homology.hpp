#pragma once

#include <cstdint>
#include <vector>

#include "tvb/modp_kernels.hpp"
#include "tvb/simplicial_complex.hpp"

namespace tvb {

// Dense row-major matrix over F_p, entries kept reduced.
struct MatrixModP {
    uint16_t p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<uint16_t> a;

    MatrixModP() = default;
    MatrixModP(uint16_t prime, int r, int c)
        : p(prime), rows(r), cols(c),
          a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    uint16_t& at(int i, int j) {
        return a[static_cast<std::size_t>(i) * cols + j];
    }
    uint16_t at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }
};

// Matrix of the boundary map from k-chains (columns) to (k-1)-chains (rows),
// signs from ascending vertex order. k = 0 yields the augmentation row of
// ones onto a one-dimensional target.
MatrixModP boundary_matrix(const SimplicialComplex& K, int k, uint16_t p);

// Rank over F_p by Gaussian elimination, pivoting on the first nonzero
// entry in each column. Deterministic.
int rank_mod_p(MatrixModP M);

struct BettiProfile {
    uint16_t p = 2;
    std::vector<long long> reduced_betti;  // indices 0..dim

    // Profile with trailing zeros removed.
    std::vector<long long> trimmed() const;
};

BettiProfile betti_numbers(const SimplicialComplex& K, uint16_t p);

struct ConnectivityResult {
    int value = -2;
    bool all_vanishing = false;  // when set, value equals dim K
};

// Largest h with reduced Betti numbers vanishing in degrees 0..h.
// Returns -1 when b~_0 != 0. Stops computing ranks once a nonzero
// Betti number is found.
ConnectivityResult homological_connectivity(const SimplicialComplex& K,
                                            uint16_t p);

}  // namespace tvb
