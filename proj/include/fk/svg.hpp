#pragma once

#include <cstdio>
#include <string>

#include "fk/spectral.hpp"
#include "fk/subgraph.hpp"

namespace fk {

struct RenderOptions {
    bool draw_boundary = true;
    const std::vector<double>* heat = nullptr;  // aligned to g.cells()
    int unit = 24;                              // pixels per cell
};

namespace detail {
inline std::string fmt_color(double t) {
    // linear white -> brick red
    int r = 255 - int(std::lround(t * (255 - 178)));
    int g = 255 - int(std::lround(t * (255 - 24)));
    int b = 255 - int(std::lround(t * (255 - 43)));
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", r, g, b);
    return buf;
}
}  // namespace detail

// Deterministic SVG of a subgraph: one filled unit square per cell, the
// exterior boundary outlined as dashed squares, optional heat coloring.
inline std::string render_svg(const Subgraph& g, const RenderOptions& opt = {}) {
    const int u = opt.unit;
    const BoundingBox& bb = g.bbox();
    const int margin = 1;
    const int x0 = bb.xmin - margin, y1 = bb.ymax + margin;
    const int w = (bb.width() + 2 * margin) * u;
    const int h = (bb.height() + 2 * margin) * u;

    double lo = 0.0, hi = 1.0;
    if (opt.heat && !opt.heat->empty()) {
        lo = *std::min_element(opt.heat->begin(), opt.heat->end());
        hi = *std::max_element(opt.heat->begin(), opt.heat->end());
        if (hi <= lo) hi = lo + 1.0;
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
           "\">\n";
    out += "<rect width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\" fill=\"white\"/>\n";

    auto square = [&](const Cell& c, const std::string& fill,
                      const std::string& extra) {
        int px = (c.x - x0) * u;
        int py = (y1 - c.y) * u;
        out += "<rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
               "\" width=\"" + std::to_string(u) + "\" height=\"" +
               std::to_string(u) + "\" fill=\"" + fill + "\"" + extra + "/>\n";
    };

    for (std::size_t i = 0; i < g.cells().size(); ++i) {
        std::string fill = "rgb(120,144,156)";
        if (opt.heat)
            fill = detail::fmt_color(((*opt.heat)[i] - lo) / (hi - lo));
        square(g.cells()[i], fill, " stroke=\"black\" stroke-width=\"1\"");
    }
    if (opt.draw_boundary)
        for (const Cell& c : boundary(g))
            square(c, "none",
                   " stroke=\"rgb(120,120,120)\" stroke-width=\"1\" "
                   "stroke-dasharray=\"3 2\"");
    out += "</svg>\n";
    return out;
}

// two shapes side by side (before/after views)
inline std::string render_pair_svg(const Subgraph& a, const Subgraph& b,
                                   const RenderOptions& opt = {}) {
    std::string left = render_svg(a, opt);
    std::string right = render_svg(b, opt);
    auto dims = [](const std::string& svg) {
        int w = 0, h = 0;
        std::sscanf(svg.c_str(), "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                                 "width=\"%d\" height=\"%d\"", &w, &h);
        return std::pair<int, int>(w, h);
    };
    auto [wl, hl] = dims(left);
    auto [wr, hr] = dims(right);
    const int gap = 16;
    int w = wl + gap + wr, h = std::max(hl, hr);
    auto body = [](const std::string& svg) {
        std::size_t open = svg.find('\n') + 1;
        std::size_t close = svg.rfind("</svg>");
        return svg.substr(open, close - open);
    };
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
           "\">\n";
    out += "<g>" + body(left) + "</g>\n";
    out += "<g transform=\"translate(" + std::to_string(wl + gap) + ",0)\">" +
           body(right) + "</g>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace fk
