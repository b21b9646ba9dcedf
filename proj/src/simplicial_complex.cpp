#include "tvb/simplicial_complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tvb {

namespace {

void trim_empty_top_dims(std::vector<std::vector<Simplex>>& faces) {
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
}

SimplicialComplex from_face_sets(int num_vertices, std::vector<std::set<Simplex>>& by_dim) {
    SimplicialComplex K;
    K.num_vertices = num_vertices;
    K.faces_by_dim.reserve(by_dim.size());
    for (auto& s : by_dim) {
        K.faces_by_dim.emplace_back(s.begin(), s.end());  // std::set iterates in lex order
    }
    trim_empty_top_dims(K.faces_by_dim);
    return K;
}

}  // namespace

int64_t SimplicialComplex::total_faces() const {
    int64_t n = 0;
    for (const auto& fs : faces_by_dim) n += static_cast<int64_t>(fs.size());
    return n;
}

void SimplicialComplex::validate() const {
    if (!faces_by_dim.empty() && faces_by_dim.back().empty()) {
        throw std::logic_error("empty top dimension stored");
    }
    for (int k = 0; k <= dim(); ++k) {
        const auto& fs = faces_by_dim[k];
        for (size_t i = 0; i < fs.size(); ++i) {
            const Simplex& f = fs[i];
            if (static_cast<int>(f.size()) != k + 1) {
                throw std::logic_error("face of wrong dimension");
            }
            for (size_t j = 0; j + 1 < f.size(); ++j) {
                if (f[j] >= f[j + 1]) throw std::logic_error("face not strictly ascending");
            }
            if (f.front() < 0 || f.back() >= num_vertices) {
                throw std::logic_error("vertex id out of range");
            }
            if (i > 0 && !(fs[i - 1] < f)) {
                throw std::logic_error("faces not sorted / duplicated");
            }
            if (k > 0) {
                Simplex sub;
                sub.reserve(k);
                for (int drop = 0; drop <= k; ++drop) {
                    sub.clear();
                    for (int t = 0; t <= k; ++t) {
                        if (t != drop) sub.push_back(f[t]);
                    }
                    const auto& lower = faces_by_dim[k - 1];
                    if (!std::binary_search(lower.begin(), lower.end(), sub)) {
                        throw std::logic_error("complex not downward closed");
                    }
                }
            }
        }
    }
}

SimplicialComplex make_complex(int num_vertices, const std::vector<Simplex>& facets) {
    if (num_vertices < 0) throw std::invalid_argument("num_vertices must be >= 0");
    int max_dim = -1;
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        max_dim = std::max(max_dim, static_cast<int>(f.size()) - 1);
    }
    std::vector<std::set<Simplex>> by_dim(max_dim + 1);
    for (const auto& f : facets) {
        Simplex s(f);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.front() < 0 || s.back() >= num_vertices) {
            throw std::invalid_argument("facet vertex id out of range");
        }
        by_dim[s.size() - 1].insert(std::move(s));
    }
    // close downward, one dimension at a time
    for (int k = max_dim; k > 0; --k) {
        Simplex sub;
        for (const Simplex& f : by_dim[k]) {
            for (int drop = 0; drop <= k; ++drop) {
                sub.clear();
                for (int t = 0; t <= k; ++t) {
                    if (t != drop) sub.push_back(f[t]);
                }
                by_dim[k - 1].insert(sub);
            }
        }
    }
    return from_face_sets(num_vertices, by_dim);
}

SimplicialComplex chessboard(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("chessboard needs m, n >= 1");
    if (m > 60 || n > 60) throw std::invalid_argument("chessboard sides above 60 unsupported");
    SimplicialComplex K;
    K.num_vertices = m * n;
    int top = std::min(m, n);
    K.faces_by_dim.resize(top);
    auto& verts = K.faces_by_dim[0];
    verts.reserve(static_cast<size_t>(m) * n);
    for (int id = 0; id < m * n; ++id) verts.push_back({id});
    // extend matchings by cells with a larger id and fresh row/column; each
    // face is produced exactly once, in lex order
    for (int k = 1; k < top; ++k) {
        const auto& prev = K.faces_by_dim[k - 1];
        auto& cur = K.faces_by_dim[k];
        for (const Simplex& f : prev) {
            uint64_t rows = 0, cols = 0;
            for (int id : f) {
                rows |= 1ULL << (id / n);
                cols |= 1ULL << (id % n);
            }
            for (int id = f.back() + 1; id < m * n; ++id) {
                if ((rows >> (id / n) & 1) || (cols >> (id % n) & 1)) continue;
                Simplex g(f);
                g.push_back(id);
                cur.push_back(std::move(g));
            }
        }
        std::sort(cur.begin(), cur.end());
    }
    trim_empty_top_dims(K.faces_by_dim);
    return K;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
    if (k < 0) throw std::invalid_argument("skeleton needs k >= 0");
    SimplicialComplex S;
    S.num_vertices = K.num_vertices;
    int keep = std::min(k, K.dim());
    S.faces_by_dim.assign(K.faces_by_dim.begin(), K.faces_by_dim.begin() + (keep + 1));
    trim_empty_top_dims(S.faces_by_dim);
    return S;
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    SimplicialComplex J;
    J.num_vertices = K.num_vertices + L.num_vertices;
    int jdim = K.dim() + L.dim() + 1;
    if (jdim < 0) return J;
    J.faces_by_dim.resize(jdim + 1);
    const int offset = K.num_vertices;
    // sigma in K (or empty), tau in L (or empty), not both empty; the union
    // is already ascending because every offset L id exceeds every K id
    for (int a = -1; a <= K.dim(); ++a) {
        for (int b = -1; b <= L.dim(); ++b) {
            if (a < 0 && b < 0) continue;
            auto& out = J.faces_by_dim[a + b + 1];
            if (a < 0) {
                for (const Simplex& t : L.faces_by_dim[b]) {
                    Simplex g;
                    g.reserve(t.size());
                    for (int id : t) g.push_back(id + offset);
                    out.push_back(std::move(g));
                }
            } else if (b < 0) {
                for (const Simplex& s : K.faces_by_dim[a]) out.push_back(s);
            } else {
                for (const Simplex& s : K.faces_by_dim[a]) {
                    for (const Simplex& t : L.faces_by_dim[b]) {
                        Simplex g(s);
                        g.reserve(s.size() + t.size());
                        for (int id : t) g.push_back(id + offset);
                        out.push_back(std::move(g));
                    }
                }
            }
        }
    }
    for (auto& fs : J.faces_by_dim) std::sort(fs.begin(), fs.end());
    trim_empty_top_dims(J.faces_by_dim);
    return J;
}

SimplicialComplex configuration_complex(const std::vector<int>& sizes,
                                        const std::vector<int>& caps, int r) {
    if (sizes.size() != caps.size()) {
        throw std::invalid_argument("sizes and caps must have equal length");
    }
    if (sizes.empty()) throw std::invalid_argument("need at least one color");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    SimplicialComplex acc;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("color size must be >= 1");
        if (caps[i] < 1 || caps[i] > r) {
            throw std::invalid_argument("cap out of range [1, r]");
        }
        SimplicialComplex block = skeleton(chessboard(sizes[i], r), caps[i] - 1);
        acc = (i == 0) ? std::move(block) : join(acc, block);
    }
    return acc;
}

std::vector<int64_t> f_vector(const SimplicialComplex& K) {
    std::vector<int64_t> f;
    f.reserve(K.faces_by_dim.size());
    for (const auto& fs : K.faces_by_dim) f.push_back(static_cast<int64_t>(fs.size()));
    return f;
}

int64_t euler_characteristic(const SimplicialComplex& K) {
    int64_t chi = 0;
    for (int k = 0; k <= K.dim(); ++k) {
        int64_t fk = K.face_count(k);
        chi += (k % 2 == 0) ? fk : -fk;
    }
    return chi;
}

int connectivity_formula(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("connectivity_formula needs m, n >= 1");
    return std::min({m, n, (m + n + 1) / 3}) - 2;
}

std::vector<Simplex> maximal_faces(const SimplicialComplex& K) {
    std::vector<Simplex> out;
    Simplex sub;
    for (int k = 0; k <= K.dim(); ++k) {
        const auto* above = (k + 1 <= K.dim()) ? &K.faces_by_dim[k + 1] : nullptr;
        for (const Simplex& f : K.faces_by_dim[k]) {
            bool contained = false;
            if (above && !above->empty()) {
                // f is non-maximal iff it extends by one vertex inside K
                for (int v = 0; v < K.num_vertices && !contained; ++v) {
                    if (std::binary_search(f.begin(), f.end(), v)) continue;
                    sub.clear();
                    sub.reserve(f.size() + 1);
                    bool placed = false;
                    for (int id : f) {
                        if (!placed && v < id) {
                            sub.push_back(v);
                            placed = true;
                        }
                        sub.push_back(id);
                    }
                    if (!placed) sub.push_back(v);
                    contained = std::binary_search(above->begin(), above->end(), sub);
                }
            }
            if (!contained) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string write_cx1(const SimplicialComplex& K) {
    std::ostringstream os;
    os << "cx1 " << K.num_vertices << "\n";
    for (const Simplex& f : maximal_faces(K)) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) os << ' ';
            os << f[i];
        }
        os << "\n";
    }
    return os.str();
}

SimplicialComplex read_cx1(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("cx1 line " + std::to_string(lineno) + ": " + msg);
    };
    int num_vertices = -1;
    std::vector<Simplex> facets;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') {
            if (lineno == 1) fail("missing 'cx1 <num_vertices>' header");
            continue;
        }
        std::istringstream ls(line);
        if (lineno == 1) {
            std::string magic;
            ls >> magic >> num_vertices;
            if (magic != "cx1" || ls.fail() || num_vertices < 0) {
                fail("missing 'cx1 <num_vertices>' header");
            }
            continue;
        }
        Simplex f;
        int v = 0;
        while (ls >> v) {
            if (v < 0 || v >= num_vertices) fail("vertex id out of range");
            if (!f.empty() && v <= f.back()) fail("vertex ids must be strictly ascending");
            f.push_back(v);
        }
        if (!ls.eof()) fail("malformed vertex id");
        if (f.empty()) fail("empty facet line");
        facets.push_back(std::move(f));
    }
    if (num_vertices < 0) {
        lineno = 1;
        fail("missing 'cx1 <num_vertices>' header");
    }
    return make_complex(num_vertices, facets);
}

SimplicialComplex read_cx1_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open complex file '" + path + "'");
    return read_cx1(in);
}

}  // namespace tvb
