#pragma once

#include <cmath>
#include <string>

#include "fk/subgraph.hpp"

namespace fk {

// Fine-grid rasterization of the union-of-squares domain of a subgraph, or
// of its l1 dilation. Each unit square splits into m x m subcells; a subcell
// belongs to the mask iff its center lies in the closed domain (epsilon = 0)
// or has exact l1 distance < epsilon to it (epsilon > 0, lattice units).
//
// Subcell (i, j) has center
//   (bx - 0.5 + (i + 0.5 - pad)/m,  by - 0.5 + (j + 0.5 - pad)/m)
// in lattice coordinates; centers never hit half-integer cell faces, so the
// membership predicate has no boundary ties.
struct RefinedMask {
    int m = 1;            // subcells per unit square side
    int n = 1;            // |g|, fixes the G* scaling
    double epsilon = 0.0; // dilation radius in lattice units
    int pad = 0;          // grid margin in subcells
    int bx = 0, by = 0;   // bounding box minimum of the base subgraph
    int width = 0, height = 0;
    std::vector<uint8_t> inside;

    bool at(int i, int j) const {
        return i >= 0 && j >= 0 && i < width && j < height &&
               inside[std::size_t(j) * std::size_t(width) + std::size_t(i)] != 0;
    }

    double center_x(int i) const { return bx - 0.5 + (i + 0.5 - pad) / double(m); }
    double center_y(int j) const { return by - 0.5 + (j + 0.5 - pad) / double(m); }

    // mesh step in G*-units (the base domain rescaled to area 1)
    double delta() const { return 1.0 / (m * std::sqrt(double(n))); }

    long count() const {
        long c = 0;
        for (uint8_t v : inside) c += v;
        return c;
    }

    double area() const { return double(count()) * delta() * delta(); }

    bool same_grid(const RefinedMask& o) const {
        return m == o.m && n == o.n && pad == o.pad && bx == o.bx && by == o.by &&
               width == o.width && height == o.height;
    }
};

namespace detail {
// exact l1 distance from a point to the closed unit square centered at c
inline double l1_to_cell(double px, double py, const Cell& c) {
    double dx = std::abs(px - c.x) - 0.5;
    double dy = std::abs(py - c.y) - 0.5;
    return (dx > 0 ? dx : 0.0) + (dy > 0 ? dy : 0.0);
}
}  // namespace detail

// min_pad lets callers force a common grid for masks of the same subgraph
// at different dilations.
inline RefinedMask build_mask(const Subgraph& g, int m, double epsilon = 0.0,
                              int min_pad = 0) {
    if (m < 1) throw std::invalid_argument("build_mask: refinement must be >= 1");
    if (epsilon < 0.0) throw std::invalid_argument("build_mask: negative epsilon");
    RefinedMask mask;
    mask.m = m;
    mask.n = g.size();
    mask.epsilon = epsilon;
    mask.pad = std::max(int(std::ceil(epsilon * m)) + 1, min_pad);
    mask.bx = g.bbox().xmin;
    mask.by = g.bbox().ymin;
    mask.width = g.bbox().width() * m + 2 * mask.pad;
    mask.height = g.bbox().height() * m + 2 * mask.pad;
    mask.inside.assign(std::size_t(mask.width) * std::size_t(mask.height), 0);

    const std::vector<Cell>& cells = g.cells();
    for (int j = 0; j < mask.height; ++j) {
        const double py = mask.center_y(j);
        for (int i = 0; i < mask.width; ++i) {
            const double px = mask.center_x(i);
            bool in;
            Cell owner{int(std::lround(px)), int(std::lround(py))};
            if (g.contains(owner)) {
                in = true;  // distance 0
            } else if (epsilon == 0.0) {
                in = false;
            } else {
                double best = std::numeric_limits<double>::infinity();
                for (const Cell& c : cells) {
                    double d = detail::l1_to_cell(px, py, c);
                    if (d < best) best = d;
                    if (best == 0.0) break;
                }
                in = best < epsilon;
            }
            if (in)
                mask.inside[std::size_t(j) * std::size_t(mask.width) + std::size_t(i)] = 1;
        }
    }
    return mask;
}

// area of (a \ b) in G*-units; both masks must share the grid
inline double mask_diff_area(const RefinedMask& a, const RefinedMask& b) {
    if (!a.same_grid(b)) throw std::invalid_argument("mask_diff_area: grid mismatch");
    long c = 0;
    for (std::size_t k = 0; k < a.inside.size(); ++k)
        if (a.inside[k] && !b.inside[k]) ++c;
    return double(c) * a.delta() * a.delta();
}

// P2 portable graymap of the mask, mainly for eyeballing
inline std::string mask_to_pgm(const RefinedMask& mask) {
    std::string out = "P2\n" + std::to_string(mask.width) + " " +
                      std::to_string(mask.height) + "\n1\n";
    for (int j = mask.height - 1; j >= 0; --j) {
        for (int i = 0; i < mask.width; ++i) {
            out += mask.at(i, j) ? '1' : '0';
            out += i + 1 == mask.width ? '\n' : ' ';
        }
    }
    return out;
}

}  // namespace fk
