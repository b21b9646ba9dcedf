#include "tvb/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace tvb {

namespace {

const char* const kPalette[8] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                 "#ff7f00", "#a65628", "#f781bf", "#999999"};

std::string num(const Rational& v) { return decimal_string(v, 3); }

}  // namespace

std::string emit_svg(const Instance& inst,
                     const std::optional<RainbowPartition>& part) {
    if (inst.d != 2) throw std::invalid_argument("emit_svg: needs d = 2");
    if (!inst.config)
        throw std::invalid_argument("emit_svg: instance has no coordinates");
    inst.validate();

    // Flip y once so the figure reads with y growing upward.
    std::vector<Point> pts;
    for (const auto& p : inst.config->points)
        pts.push_back({p[0], -p[1]});
    Rational xmin = pts[0][0], xmax = pts[0][0];
    Rational ymin = pts[0][1], ymax = pts[0][1];
    for (const auto& p : pts) {
        if (p[0] < xmin) xmin = p[0];
        if (p[0] > xmax) xmax = p[0];
        if (p[1] < ymin) ymin = p[1];
        if (p[1] > ymax) ymax = p[1];
    }
    Rational w = xmax - xmin, h = ymax - ymin;
    Rational mx = (w == 0) ? Rational(1) : w / 20;
    Rational my = (h == 0) ? Rational(1) : h / 20;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << num(xmin - mx) << " " << num(ymin - my) << " " << num(w + 2 * mx)
        << " " << num(h + 2 * my) << "\">\n";

    if (part) {
        for (std::size_t j = 0; j < part->faces.size(); ++j) {
            const Simplex& f = part->faces[j];
            const char* color = kPalette[j % 8];
            if (f.size() >= 3) {
                out << "<polygon points=\"";
                for (std::size_t t = 0; t < f.size(); ++t) {
                    if (t) out << " ";
                    out << num(pts[f[t]][0]) << "," << num(pts[f[t]][1]);
                }
                out << "\" fill=\"" << color
                    << "\" fill-opacity=\"0.3\" stroke=\"" << color << "\"/>\n";
            } else if (f.size() == 2) {
                out << "<line x1=\"" << num(pts[f[0]][0]) << "\" y1=\""
                    << num(pts[f[0]][1]) << "\" x2=\"" << num(pts[f[1]][0])
                    << "\" y2=\"" << num(pts[f[1]][1]) << "\" stroke=\""
                    << color << "\" stroke-opacity=\"0.3\" stroke-width=\"2\"/>\n";
            } else {
                out << "<circle cx=\"" << num(pts[f[0]][0]) << "\" cy=\""
                    << num(pts[f[0]][1]) << "\" r=\"6\" fill=\"" << color
                    << "\" fill-opacity=\"0.3\"/>\n";
            }
        }
    }

    for (std::size_t v = 0; v < pts.size(); ++v)
        out << "<circle cx=\"" << num(pts[v][0]) << "\" cy=\""
            << num(pts[v][1]) << "\" r=\"4\" fill=\""
            << kPalette[inst.coloring.color_of[v] % 8] << "\"/>\n";

    if (part && part->witness) {
        const Point& wp = *part->witness;
        if (static_cast<int>(wp.size()) != 2)
            throw std::invalid_argument("emit_svg: witness dimension mismatch");
        Rational cx = wp[0], cy = -wp[1];
        out << "<line x1=\"" << num(cx - 6) << "\" y1=\"" << num(cy)
            << "\" x2=\"" << num(cx + 6) << "\" y2=\"" << num(cy)
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        out << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy - 6)
            << "\" x2=\"" << num(cx) << "\" y2=\"" << num(cy + 6)
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tvb
