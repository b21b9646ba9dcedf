#include "tvb/search.hpp"

#include <algorithm>
#include <numeric>

#include "tvb/rng.hpp"

namespace tvb {

void Coloring::validate() const {
    if (m < 1) throw std::invalid_argument("coloring needs at least one color");
    if (color_of.empty())
        throw std::invalid_argument("coloring needs at least one vertex");
    std::vector<int> count(static_cast<std::size_t>(m), 0);
    for (int c : color_of) {
        if (c < 0 || c >= m)
            throw std::invalid_argument("vertex color out of range");
        ++count[c];
    }
    for (int i = 0; i < m; ++i)
        if (count[i] == 0)
            throw std::invalid_argument("color class " + std::to_string(i + 1) +
                                        " is empty");
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(m));
    for (int v = 0; v < static_cast<int>(color_of.size()); ++v)
        out[color_of[v]].push_back(v);
    return out;
}

void Instance::validate() const {
    if (d < 1) throw std::invalid_argument("instance needs d >= 1");
    if (r < 2) throw std::invalid_argument("instance needs r >= 2");
    coloring.validate();
    if (static_cast<int>(caps.caps.size()) != coloring.m)
        throw std::invalid_argument("cap vector length must equal color count");
    for (int l : caps.caps)
        if (l < 1 || l > r)
            throw std::invalid_argument("caps must satisfy 1 <= l_i <= r");
    if (config) {
        config->validate();
        if (config->d != d)
            throw std::invalid_argument("configuration dimension mismatch");
        if (static_cast<int>(config->points.size()) != num_vertices())
            throw std::invalid_argument("configuration needs one point per vertex");
    }
}

EnumerationBoundExceeded::EnumerationBoundExceeded(uint64_t est, uint64_t b)
    : std::runtime_error("enumeration estimate " + std::to_string(est) +
                         " exceeds bound " + std::to_string(b)),
      estimate(est), bound(b) {}

bool is_rainbow(const Coloring& coloring, const Simplex& face) {
    if (face.empty()) throw std::invalid_argument("is_rainbow: empty face");
    std::vector<char> seen(static_cast<std::size_t>(coloring.m), 0);
    for (int v : face) {
        if (v < 0 || v >= static_cast<int>(coloring.color_of.size()))
            throw std::invalid_argument("is_rainbow: vertex id out of range");
        int c = coloring.color_of[v];
        if (seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

VerificationReport verify_partition(const Instance& inst,
                                    const RainbowPartition& part,
                                    bool check_geometry) {
    inst.validate();
    int N = inst.num_vertices();
    for (const auto& f : part.faces)
        for (int v : f)
            if (v < 0 || v >= N)
                throw std::invalid_argument("verify_partition: vertex id out of range");

    VerificationReport rep;
    rep.structure_ok = static_cast<int>(part.faces.size()) == inst.r;
    std::vector<char> used(static_cast<std::size_t>(N), 0);
    for (const auto& f : part.faces) {
        if (f.empty()) rep.structure_ok = false;
        for (int v : f) {
            if (used[v]) rep.structure_ok = false;
            used[v] = 1;
        }
    }

    for (const auto& f : part.faces) {
        std::vector<char> cols(static_cast<std::size_t>(inst.coloring.m), 0);
        for (int v : f) {
            int c = inst.coloring.color_of[v];
            if (cols[c]) rep.rainbow_ok = false;
            cols[c] = 1;
        }
    }

    rep.usage.assign(static_cast<std::size_t>(inst.coloring.m), 0);
    for (int v = 0; v < N; ++v)
        if (used[v]) ++rep.usage[inst.coloring.color_of[v]];
    for (int i = 0; i < inst.coloring.m; ++i)
        if (rep.usage[i] > inst.caps.caps[i]) rep.caps_ok = false;

    if (check_geometry) {
        if (!inst.config)
            throw std::invalid_argument(
                "verify_partition: geometry check on a coordinate-free instance");
        if (rep.structure_ok)
            rep.intersection_ok = hulls_intersect(*inst.config, part.faces).feasible;
    }

    if (!rep.structure_ok)
        rep.first_violation = "structure";
    else if (!rep.rainbow_ok)
        rep.first_violation = "rainbow";
    else if (rep.intersection_ok && !*rep.intersection_ok)
        rep.first_violation = "intersection";
    else if (!rep.caps_ok)
        rep.first_violation = "caps";
    return rep;
}

namespace {

unsigned __int128 binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 b = 1;
    for (int j = 0; j < k; ++j) b = b * static_cast<unsigned>(n - j) / (j + 1);
    return b;
}

unsigned __int128 falling(int r, int k) {
    unsigned __int128 f = 1;
    for (int j = 0; j < k; ++j) f *= static_cast<unsigned>(r - j);
    return f;
}

struct ExhaustiveRun {
    const Instance& inst;
    const std::vector<std::vector<int>> classes;
    bool stop_at_first;
    std::vector<Simplex> faces;
    long long count = 0;
    std::optional<RainbowPartition> found;

    explicit ExhaustiveRun(const Instance& i, bool stop)
        : inst(i), classes(i.coloring.classes()), stop_at_first(stop),
          faces(static_cast<std::size_t>(i.r)) {}

    bool leaf() {
        for (const auto& f : faces)
            if (f.empty()) return false;
        int prev_min = -1;
        for (const auto& f : faces) {
            int mn = *std::min_element(f.begin(), f.end());
            if (mn < prev_min) return false;
            prev_min = mn;
        }
        std::vector<Simplex> sorted = faces;
        for (auto& f : sorted) std::sort(f.begin(), f.end());
        IntersectionResult ir = hulls_intersect(*inst.config, sorted);
        if (!ir.feasible) return false;
        if (stop_at_first) {
            found = RainbowPartition{std::move(sorted), std::move(ir.witness)};
            return true;
        }
        ++count;
        return false;
    }

    // Vertices of the current color take target faces in ascending order,
    // with "unused" tried last; each face receives at most one vertex per
    // color and each color stays within its cap.
    bool walk(int ci, int pi, uint32_t mask, int assigned) {
        if (ci == inst.coloring.m) return leaf();
        const auto& cls = classes[ci];
        if (pi == static_cast<int>(cls.size())) return walk(ci + 1, 0, 0, 0);
        int v = cls[pi];
        if (assigned < inst.caps.caps[ci]) {
            for (int f = 0; f < inst.r; ++f) {
                if (mask & (1u << f)) continue;
                faces[f].push_back(v);
                if (walk(ci, pi + 1, mask | (1u << f), assigned + 1)) return true;
                faces[f].pop_back();
            }
        }
        return walk(ci, pi + 1, mask, assigned);
    }
};

std::optional<RainbowPartition> heuristic_find(const Instance& inst,
                                               const Heuristic& h) {
    int N = inst.num_vertices();
    int r = inst.r;
    int m = inst.coloring.m;
    std::vector<int> order(static_cast<std::size_t>(N));
    std::vector<int> capleft(static_cast<std::size_t>(m));
    std::vector<uint32_t> colormask(static_cast<std::size_t>(m));
    std::vector<int> candidates;

    for (int t = 0; t < h.restarts; ++t) {
        SplitMix64 rng(splitmix64_once(h.seed ^ static_cast<uint64_t>(t)));
        std::iota(order.begin(), order.end(), 0);
        for (int i = N - 1; i > 0; --i) {
            int j = static_cast<int>(rng.uniform(0, i));
            std::swap(order[i], order[j]);
        }
        for (int i = 0; i < m; ++i) capleft[i] = inst.caps.caps[i];
        std::fill(colormask.begin(), colormask.end(), 0u);
        std::vector<Simplex> faces(static_cast<std::size_t>(r));

        for (int v : order) {
            int c = inst.coloring.color_of[v];
            if (capleft[c] == 0) continue;
            candidates.clear();
            for (int f = 0; f < r; ++f)
                if (!(colormask[c] & (1u << f))) candidates.push_back(f);
            if (candidates.empty()) continue;
            int f = candidates[rng.uniform(0, static_cast<int>(candidates.size()) - 1)];
            faces[f].push_back(v);
            colormask[c] |= (1u << f);
            --capleft[c];
        }

        bool complete = true;
        for (const auto& f : faces)
            if (f.empty()) complete = false;
        if (!complete) continue;

        for (auto& f : faces) std::sort(f.begin(), f.end());
        std::sort(faces.begin(), faces.end(),
                  [](const Simplex& a, const Simplex& b) {
                      return a.front() < b.front();
                  });
        IntersectionResult ir = hulls_intersect(*inst.config, faces);
        if (ir.feasible)
            return RainbowPartition{std::move(faces), std::move(ir.witness)};
    }
    return std::nullopt;
}

}  // namespace

uint64_t enumeration_estimate(const Instance& inst) {
    inst.validate();
    auto cls = inst.coloring.classes();
    unsigned __int128 prod = 1;
    const unsigned __int128 cap = ~static_cast<uint64_t>(0);
    for (int i = 0; i < inst.coloring.m; ++i) {
        int s = static_cast<int>(cls[i].size());
        unsigned __int128 ways = 0;
        for (int k = 0; k <= std::min(inst.caps.caps[i], std::min(s, inst.r)); ++k)
            ways += binom(s, k) * falling(inst.r, k);
        prod *= ways;
        if (prod > cap) return ~static_cast<uint64_t>(0);
    }
    return static_cast<uint64_t>(prod);
}

std::optional<RainbowPartition> find_partition(const Instance& inst,
                                               const Strategy& strategy) {
    inst.validate();
    if (!inst.config)
        throw std::invalid_argument("find_partition: instance has no coordinates");
    if (inst.r > 30)
        throw std::invalid_argument("find_partition: r above 30 unsupported");

    if (const auto* ex = std::get_if<Exhaustive>(&strategy)) {
        uint64_t est = enumeration_estimate(inst);
        if (est > ex->enum_bound)
            throw EnumerationBoundExceeded(est, ex->enum_bound);
        ExhaustiveRun run(inst, true);
        run.walk(0, 0, 0, 0);
        return run.found;
    }
    return heuristic_find(inst, std::get<Heuristic>(strategy));
}

long long count_partitions(const Instance& inst, uint64_t enum_bound) {
    inst.validate();
    if (!inst.config)
        throw std::invalid_argument("count_partitions: instance has no coordinates");
    if (inst.r > 30)
        throw std::invalid_argument("count_partitions: r above 30 unsupported");
    uint64_t est = enumeration_estimate(inst);
    if (est > enum_bound) throw EnumerationBoundExceeded(est, enum_bound);
    ExhaustiveRun run(inst, false);
    run.walk(0, 0, 0, 0);
    return run.count;
}

}  // namespace tvb
