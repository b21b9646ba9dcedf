#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tvb/geometry.hpp"
#include "tvb/simplicial_complex.hpp"

namespace tvb {

struct Coloring {
    int m = 1;
    std::vector<int> color_of;  // vertex id -> color in 0..m-1

    void validate() const;
    std::vector<std::vector<int>> classes() const;
};

struct CapVector {
    std::vector<int> caps;  // l_i, each in [1, r]
};

struct Instance {
    int d = 1;
    int r = 2;
    Coloring coloring;
    CapVector caps;
    // Absent config means a coordinate-free instance; only combinatorial
    // checks are available on it.
    std::optional<PointConfiguration> config;

    int num_vertices() const { return static_cast<int>(coloring.color_of.size()); }
    void validate() const;
};

struct RainbowPartition {
    std::vector<Simplex> faces;  // canonical: sorted by minimal vertex id
    std::optional<Point> witness;
};

struct VerificationReport {
    bool structure_ok = true;  // nonempty, disjoint, r faces
    bool rainbow_ok = true;
    std::optional<bool> intersection_ok;  // set only when geometry checked
    bool caps_ok = true;
    std::vector<int> usage;       // per color, |(union of faces) cap C_i|
    std::string first_violation;  // "", "structure", "rainbow", "intersection", "caps"

    bool ok() const {
        return structure_ok && rainbow_ok && caps_ok &&
               (!intersection_ok || *intersection_ok);
    }
};

struct Exhaustive {
    uint64_t enum_bound = 10000000;
};

struct Heuristic {
    int restarts = 10000;
    uint64_t seed = 0;
};

using Strategy = std::variant<Exhaustive, Heuristic>;

class EnumerationBoundExceeded : public std::runtime_error {
  public:
    uint64_t estimate;
    uint64_t bound;
    EnumerationBoundExceeded(uint64_t est, uint64_t b);
};

bool is_rainbow(const Coloring& coloring, const Simplex& face);

VerificationReport verify_partition(const Instance& inst,
                                    const RainbowPartition& part,
                                    bool check_geometry);

// Upper bound on exhaustive leaves: the number of capped partial
// injections per color, multiplied over colors. Saturates at UINT64_MAX.
uint64_t enumeration_estimate(const Instance& inst);

// Exhaustive mode is complete: it enumerates the faces of the
// configuration complex (capped partial injections per color, DFS by
// colors ascending, vertices ascending, target faces ascending), keeps
// tuples of r nonempty faces in canonical order, and LP-checks each.
// Heuristic mode runs seeded random maximal capped-rainbow assignments.
std::optional<RainbowPartition> find_partition(const Instance& inst,
                                               const Strategy& strategy);

long long count_partitions(const Instance& inst,
                           uint64_t enum_bound = 10000000);

}  // namespace tvb
