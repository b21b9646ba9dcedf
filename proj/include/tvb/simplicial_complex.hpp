#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tvb {

// A simplex is its strictly ascending list of vertex ids. The empty simplex
// is never stored; it only enters f-vector arithmetic as f_{-1} = 1.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex, all faces stored per dimension.
// Invariants (enforced by the builders below, checkable via validate()):
//   - downward closed
//   - every vertex id < num_vertices
//   - within each dimension, faces lexicographically sorted, no duplicates
// Complexes are immutable after construction.
struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<std::vector<Simplex>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    bool empty() const { return faces_by_dim.empty(); }
    int64_t face_count(int k) const {
        if (k < 0 || k > dim()) return 0;
        return static_cast<int64_t>(faces_by_dim[k].size());
    }
    int64_t total_faces() const;

    // Throws std::logic_error describing the first violated invariant.
    void validate() const;
};

// Downward closure of the given facets. Ids must be < num_vertices and every
// facet nonempty; an empty facet list yields the empty complex.
SimplicialComplex make_complex(int num_vertices, const std::vector<Simplex>& facets);

// Chessboard complex: vertex set [m] x [n] with (i,j) |-> (i-1)*n + (j-1),
// faces the nonempty partial matchings (pairwise distinct rows and columns).
SimplicialComplex chessboard(int m, int n);

// Faces of K of dimension <= k. k >= dim(K) returns K unchanged.
SimplicialComplex skeleton(const SimplicialComplex& K, int k);

// Join K * L: vertex ids of L are offset by K.num_vertices; faces are the
// unions of a face-or-empty of K with a face-or-empty of L, not both empty.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

// skeleton(chessboard(sizes[0], r), caps[0]-1) * ... joined in color order,
// color blocks laid out consecutively. Requires 1 <= caps[i] <= r.
SimplicialComplex configuration_complex(const std::vector<int>& sizes,
                                        const std::vector<int>& caps, int r);

std::vector<int64_t> f_vector(const SimplicialComplex& K);
int64_t euler_characteristic(const SimplicialComplex& K);

// min{m, n, floor((m+n+1)/3)} - 2
int connectivity_formula(int m, int n);

// Maximal faces, lexicographically sorted across all dimensions.
std::vector<Simplex> maximal_faces(const SimplicialComplex& K);

// cx1 file format. Line 1: "cx1 <num_vertices>", then one facet per line as
// space-separated ascending vertex ids; '#' starts a comment line. The writer
// emits facets in lexicographic order, so output is bit-exact per complex.
std::string write_cx1(const SimplicialComplex& K);
SimplicialComplex read_cx1(std::istream& in);
SimplicialComplex read_cx1_file(const std::string& path);

}  // namespace tvb
