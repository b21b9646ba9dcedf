#include "tvb/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace tvb {

namespace {

std::string describe(const std::string& format, int lineno,
                     const std::string& msg) {
    if (lineno <= 0) return format + ": " + msg;
    return format + " line " + std::to_string(lineno) + ": " + msg;
}

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream ss(text);
    std::string raw;
    int no = 0;
    while (std::getline(ss, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line l;
        l.no = no;
        std::string t;
        while (ls >> t) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

int parse_int(const std::string& format, const Line& l, std::size_t idx,
              const std::string& what) {
    const std::string& tok = l.tok[idx];
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || v < -2147483648LL || v > 2147483647LL)
        throw ParseError(format, l.no, "bad " + what + " '" + tok + "'");
    return static_cast<int>(v);
}

const Line& expect_line(const std::string& format,
                        const std::vector<Line>& lines, std::size_t i,
                        const std::string& what) {
    if (i >= lines.size())
        throw ParseError(format, lines.empty() ? 1 : lines.back().no,
                         "unexpected end of input, expected " + what);
    return lines[i];
}

int header_int(const std::string& format, const std::vector<Line>& lines,
               std::size_t i, const std::string& key) {
    const Line& l = expect_line(format, lines, i, "'" + key + " <int>'");
    if (l.tok[0] != key || l.tok.size() != 2)
        throw ParseError(format, l.no, "expected '" + key + " <int>'");
    return parse_int(format, l, 1, key);
}

Rational parse_coord(const std::string& format, const Line& l,
                     std::size_t idx) {
    try {
        return parse_rational(l.tok[idx]);
    } catch (const std::exception&) {
        throw ParseError(format, l.no,
                         "non-rational token '" + l.tok[idx] + "'");
    }
}

}  // namespace

ParseError::ParseError(const std::string& format, int lineno,
                       const std::string& msg)
    : std::runtime_error(describe(format, lineno, msg)), line(lineno) {}

Instance parse_instance(const std::string& text) {
    const std::string F = "tvb1";
    auto lines = tokenize(text);
    const Line& head = expect_line(F, lines, 0, "'tvb1' header");
    if (head.tok.size() != 1 || head.tok[0] != "tvb1")
        throw ParseError(F, head.no, "malformed header, expected 'tvb1'");

    Instance inst;
    inst.d = header_int(F, lines, 1, "d");
    inst.r = header_int(F, lines, 2, "r");
    inst.coloring.m = header_int(F, lines, 3, "m");
    if (inst.d < 1) throw ParseError(F, lines[1].no, "d must be at least 1");
    if (inst.r < 2) throw ParseError(F, lines[2].no, "r must be at least 2");
    if (inst.coloring.m < 1)
        throw ParseError(F, lines[3].no, "m must be at least 1");

    const Line& capline = expect_line(F, lines, 4, "'caps ...'");
    if (capline.tok[0] != "caps" ||
        capline.tok.size() != static_cast<std::size_t>(inst.coloring.m) + 1)
        throw ParseError(F, capline.no,
                         "expected 'caps' with " +
                             std::to_string(inst.coloring.m) + " values");
    for (int i = 0; i < inst.coloring.m; ++i) {
        int l = parse_int(F, capline, static_cast<std::size_t>(i) + 1, "cap");
        if (l < 1 || l > inst.r)
            throw ParseError(F, capline.no,
                             "cap " + std::to_string(l) +
                                 " out of range (CapVector needs 1 <= l_i <= r)");
        inst.caps.caps.push_back(l);
    }

    int npoints = header_int(F, lines, 5, "points");
    if (npoints < 0)
        throw ParseError(F, lines[5].no, "points count must be non-negative");

    std::size_t i = 6;
    if (npoints == 0) {
        const Line& cs = expect_line(F, lines, i, "'colorsizes ...'");
        if (cs.tok[0] != "colorsizes" ||
            cs.tok.size() != static_cast<std::size_t>(inst.coloring.m) + 1)
            throw ParseError(F, cs.no,
                             "expected 'colorsizes' with " +
                                 std::to_string(inst.coloring.m) + " values");
        for (int c = 0; c < inst.coloring.m; ++c) {
            int sz = parse_int(F, cs, static_cast<std::size_t>(c) + 1,
                               "color size");
            if (sz < 1)
                throw ParseError(F, cs.no, "color sizes must be positive");
            for (int k = 0; k < sz; ++k) inst.coloring.color_of.push_back(c);
        }
        ++i;
    } else {
        PointConfiguration config;
        config.d = inst.d;
        for (int k = 0; k < npoints; ++k, ++i) {
            const Line& l = expect_line(F, lines, i, "a point line");
            if (l.tok.size() != static_cast<std::size_t>(inst.d) + 1)
                throw ParseError(F, l.no,
                                 "wrong coordinate count, expected " +
                                     std::to_string(inst.d) + " coordinates");
            int color = parse_int(F, l, 0, "color");
            if (color < 1 || color > inst.coloring.m)
                throw ParseError(F, l.no,
                                 "color " + std::to_string(color) +
                                     " out of range [1," +
                                     std::to_string(inst.coloring.m) + "]");
            inst.coloring.color_of.push_back(color - 1);
            Point pt;
            for (int c = 0; c < inst.d; ++c)
                pt.push_back(parse_coord(F, l, static_cast<std::size_t>(c) + 1));
            config.points.push_back(std::move(pt));
        }
        inst.config = std::move(config);
    }
    if (i < lines.size())
        throw ParseError(F, lines[i].no, "unexpected trailing content");

    try {
        inst.validate();
    } catch (const std::exception& e) {
        throw ParseError(F, 0, e.what());
    }
    return inst;
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << "tvb1\n";
    out << "d " << inst.d << "\n";
    out << "r " << inst.r << "\n";
    out << "m " << inst.coloring.m << "\n";
    out << "caps";
    for (int l : inst.caps.caps) out << " " << l;
    out << "\n";
    if (!inst.config) {
        out << "points 0\ncolorsizes";
        auto cls = inst.coloring.classes();
        for (const auto& c : cls) out << " " << c.size();
        out << "\n";
    } else {
        out << "points " << inst.config->points.size() << "\n";
        for (std::size_t v = 0; v < inst.config->points.size(); ++v) {
            out << inst.coloring.color_of[v] + 1;
            for (const auto& x : inst.config->points[v])
                out << " " << format_rational(x);
            out << "\n";
        }
    }
    return out.str();
}

RainbowPartition parse_partition(const std::string& text) {
    const std::string F = "part1";
    auto lines = tokenize(text);
    const Line& head = expect_line(F, lines, 0, "'part1 <r>' header");
    if (head.tok.size() != 2 || head.tok[0] != "part1")
        throw ParseError(F, head.no, "malformed header, expected 'part1 <r>'");
    int r = parse_int(F, head, 1, "r");
    if (r < 1) throw ParseError(F, head.no, "r must be at least 1");

    RainbowPartition part;
    std::size_t i = 1;
    for (int f = 0; f < r; ++f, ++i) {
        const Line& l = expect_line(F, lines, i, "a face line");
        Simplex face;
        for (std::size_t t = 0; t < l.tok.size(); ++t) {
            int v = parse_int(F, l, t, "vertex id");
            if (v < 0) throw ParseError(F, l.no, "vertex ids must be non-negative");
            if (!face.empty() && v <= face.back())
                throw ParseError(F, l.no, "vertex ids must be strictly ascending");
            face.push_back(v);
        }
        part.faces.push_back(std::move(face));
    }
    if (i < lines.size()) {
        const Line& l = lines[i];
        if (l.tok[0] != "witness")
            throw ParseError(F, l.no, "unexpected trailing content");
        if (l.tok.size() < 2)
            throw ParseError(F, l.no, "witness needs coordinates");
        Point w;
        for (std::size_t t = 1; t < l.tok.size(); ++t)
            w.push_back(parse_coord(F, l, t));
        part.witness = std::move(w);
        ++i;
    }
    if (i < lines.size())
        throw ParseError(F, lines[i].no, "unexpected trailing content");
    return part;
}

std::string render_partition(const RainbowPartition& part) {
    std::ostringstream out;
    out << "part1 " << part.faces.size() << "\n";
    for (const auto& f : part.faces) {
        for (std::size_t t = 0; t < f.size(); ++t)
            out << (t ? " " : "") << f[t];
        out << "\n";
    }
    if (part.witness) {
        out << "witness";
        for (const auto& x : *part.witness) out << " " << format_rational(x);
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed on " + path);
}

Instance read_instance_file(const std::string& path) {
    return parse_instance(read_text_file(path));
}

RainbowPartition read_partition_file(const std::string& path) {
    return parse_partition(read_text_file(path));
}

}  // namespace tvb
