#include "ek/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

namespace ek {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Canvas {
    double min_x, min_y, span;
    static constexpr double size = 720.0;
    static constexpr double margin = 48.0;

    double sx(double x) const { return margin + (x - min_x) / span * (size - 2 * margin); }
    double sy(double y) const { return size - margin - (y - min_y) / span * (size - 2 * margin); }
};

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const EmbeddingFile& file, const PlotOptions& opts) {
    const bool planar = std::holds_alternative<PlanarEmbedding>(file.embedding);
    const Norm norm = planar ? std::get<PlanarEmbedding>(file.embedding).norm : Norm::L2;
    const auto points = planar
                            ? to_float_points(std::get<PlanarEmbedding>(file.embedding), opts.digits)
                            : to_float_points(std::get<CircularEmbedding>(file.embedding), opts.digits);

    // Outline extents: l1 lives on [0,S]^2, linf on |x|+|y| <= D, l2 on the
    // unit circle. Hand-written files may stray outside; widen the canvas,
    // not the outline.
    double ext = 1.0, lo = 0.0;
    for (const auto& p : points) {
        if (norm == Norm::L1) {
            ext = std::max({ext, p.x, p.y});
            lo = std::min({lo, p.x, p.y});
        }
        if (norm == Norm::Linf) ext = std::max(ext, std::abs(p.x) + std::abs(p.y));
    }
    Canvas cv{};
    if (norm == Norm::L1) {
        cv = {lo, lo, ext - lo};
    } else {
        cv = {-ext, -ext, 2 * ext};
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::size << "\" height=\""
       << Canvas::size << "\" viewBox=\"0 0 " << Canvas::size << " " << Canvas::size << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const char* outline_style = "fill=\"none\" stroke=\"#999\" stroke-width=\"1.5\"";
    if (norm == Norm::L1) {
        os << "  <rect x=\"" << fmt(cv.sx(0)) << "\" y=\"" << fmt(cv.sy(ext)) << "\" width=\""
           << fmt(cv.sx(ext) - cv.sx(0)) << "\" height=\"" << fmt(cv.sy(0) - cv.sy(ext)) << "\" "
           << outline_style << "/>\n";
    } else if (norm == Norm::Linf) {
        os << "  <polygon points=\"" << fmt(cv.sx(ext)) << "," << fmt(cv.sy(0)) << " "
           << fmt(cv.sx(0)) << "," << fmt(cv.sy(ext)) << " " << fmt(cv.sx(-ext)) << ","
           << fmt(cv.sy(0)) << " " << fmt(cv.sx(0)) << "," << fmt(cv.sy(-ext)) << "\" "
           << outline_style << "/>\n";
    } else {
        os << "  <circle cx=\"" << fmt(cv.sx(0)) << "\" cy=\"" << fmt(cv.sy(0)) << "\" r=\""
           << fmt(cv.sx(1) - cv.sx(0)) << "\" " << outline_style << "/>\n";
    }

    for (const auto& p : points) {
        const double x = cv.sx(p.x), y = cv.sy(p.y);
        if (p.is_candidate) {
            os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
               << "\" r=\"6\" fill=\"#1a1a1a\"/>\n";
            std::string name = p.label;
            if (!file.names.empty() && p.label.size() > 1 && p.label[0] == 'c') {
                const int id = std::atoi(p.label.c_str() + 1);
                if (auto it = file.names.find(id); it != file.names.end()) name = it->second;
            }
            os << "  <text x=\"" << fmt(x + 9) << "\" y=\"" << fmt(y - 9)
               << "\" font-family=\"sans-serif\" font-size=\"15\">" << esc(name) << "</text>\n";
        } else {
            os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
               << "\" r=\"3.5\" fill=\"#d2622a\"/>\n";
            if (opts.labels) {
                std::string text = p.label;
                if (p.multiplicity > 1) text += " x" + std::to_string(p.multiplicity);
                os << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y + 14)
                   << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#a04515\">" << esc(text)
                   << "</text>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ek
