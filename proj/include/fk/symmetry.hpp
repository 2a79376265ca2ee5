#pragma once

#include <map>
#include <optional>

#include "fk/spectral.hpp"
#include "fk/subgraph.hpp"

namespace fk {

enum class Axis { horizontal, vertical };
enum class Sign { positive, negative };

// Certificates under which symmetrization strictly lowers lambda_D: a
// nonempty disconnected slice, or an adjacent slice pair where neither
// walls in the other. Indices refer to slices along the given axis
// (rows for horizontal symmetrization, columns for vertical).
struct StrictnessFlags {
    std::vector<int> disconnected_slices;
    std::vector<std::pair<int, int>> mutual_nonwalling;

    bool any() const {
        return !disconnected_slices.empty() || !mutual_nonwalling.empty();
    }
};

struct SymmetrizationOutcome {
    Subgraph output;
    std::optional<std::vector<double>> transported;  // aligned to output.cells()
    double lambda_before = 0.0;
    double lambda_after = 0.0;
    StrictnessFlags flags;
};

namespace detail {

// start of the centered run of length k: extra cell on the positive side for
// the positive sign, mirrored for the negative sign
inline int centered_run_start(int k, Sign sign) {
    return sign == Sign::positive ? -((k - 1) / 2) : -(k / 2);
}

// start of the centered diagonal run {(x, x+h)} of size s, extra point on
// the right of y = -x
inline int diagonal_run_start(int h, int s) {
    // ceil(-(h+s-1)/2)
    int num = -(h + s - 1);
    return num >= 0 ? (num + 1) / 2 : -((-num) / 2);
}

// positions of a horizontal run sorted by the transport fill order
// 0, 1, -1, 2, -2, ... (positive) or 0, -1, 1, -2, 2, ... (negative)
inline std::vector<int> fill_order(int start, int k, Sign sign) {
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[std::size_t(i)] = start + i;
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
        int aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
        if (aa != ab) return aa < ab;
        return sign == Sign::positive ? a > b : a < b;
    });
    return pos;
}

struct SliceEntry {
    std::vector<int> coords;   // running coordinate of the member cells
    std::vector<double> vals;  // matching f values (empty when no f given)
};

// values sorted descending, ties by original coordinate ascending
inline std::vector<double> descending_values(const SliceEntry& e) {
    std::vector<std::size_t> idx(e.vals.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return e.vals[a] > e.vals[b];
    });
    std::vector<double> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(e.vals[i]);
    return out;
}

}  // namespace detail

// Axis symmetrization without the spectral bookkeeping: recenters every
// slice along the axis and optionally transports a function f on g.
inline std::pair<Subgraph, std::optional<std::vector<double>>>
symmetrize_axis_core(const Subgraph& g, Axis axis, Sign sign,
                     const std::vector<double>* f = nullptr) {
    if (f && f->size() != std::size_t(g.size()))
        throw std::invalid_argument("symmetrize: value count mismatch");

    std::map<int, detail::SliceEntry> slices;  // key: fixed coordinate
    const std::vector<Cell>& cells = g.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        int key = axis == Axis::horizontal ? c.y : c.x;
        int run = axis == Axis::horizontal ? c.x : c.y;
        detail::SliceEntry& e = slices[key];
        e.coords.push_back(run);
        if (f) e.vals.push_back((*f)[i]);
    }

    std::vector<Cell> out_cells;
    std::vector<std::pair<Cell, double>> out_vals;
    for (auto& [key, e] : slices) {
        const int k = int(e.coords.size());
        const int start = detail::centered_run_start(k, sign);
        for (int i = 0; i < k; ++i) {
            int run = start + i;
            out_cells.push_back(axis == Axis::horizontal ? Cell{run, key}
                                                         : Cell{key, run});
        }
        if (f) {
            std::vector<int> order = detail::fill_order(start, k, sign);
            std::vector<double> vals = detail::descending_values(e);
            for (int i = 0; i < k; ++i) {
                Cell c = axis == Axis::horizontal ? Cell{order[std::size_t(i)], key}
                                                  : Cell{key, order[std::size_t(i)]};
                out_vals.emplace_back(c, vals[std::size_t(i)]);
            }
        }
    }

    Subgraph out(std::move(out_cells));
    std::optional<std::vector<double>> transported;
    if (f) {
        transported.emplace(out.cells().size(), 0.0);
        for (const auto& [c, v] : out_vals)
            (*transported)[std::size_t(out.index_of(c))] = v;
    }
    return {std::move(out), std::move(transported)};
}

// Diagonal symmetrization core: recenters every diagonal slice about
// y = -x, extra point on the right.
inline std::pair<Subgraph, std::optional<std::vector<double>>>
symmetrize_diagonal_core(const Subgraph& g, const std::vector<double>* f = nullptr) {
    if (f && f->size() != std::size_t(g.size()))
        throw std::invalid_argument("symmetrize: value count mismatch");

    std::map<int, detail::SliceEntry> slices;  // key: h with y = x + h
    const std::vector<Cell>& cells = g.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        detail::SliceEntry& e = slices[c.y - c.x];
        e.coords.push_back(c.x);
        if (f) e.vals.push_back((*f)[i]);
    }

    std::vector<Cell> out_cells;
    std::vector<std::pair<Cell, double>> out_vals;
    for (auto& [h, e] : slices) {
        const int s = int(e.coords.size());
        const int start = detail::diagonal_run_start(h, s);
        std::vector<int> xs(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            xs[std::size_t(i)] = start + i;
            out_cells.push_back(Cell{start + i, start + i + h});
        }
        if (f) {
            // distance from y = -x is |2x + h| / sqrt(2); right first on ties
            std::sort(xs.begin(), xs.end(), [&](int a, int b) {
                int da = 2 * a + h, db = 2 * b + h;
                int aa = da < 0 ? -da : da, ab = db < 0 ? -db : db;
                if (aa != ab) return aa < ab;
                return a > b;
            });
            std::vector<double> vals = detail::descending_values(e);
            for (int i = 0; i < s; ++i)
                out_vals.emplace_back(Cell{xs[std::size_t(i)], xs[std::size_t(i)] + h},
                                      vals[std::size_t(i)]);
        }
    }

    Subgraph out(std::move(out_cells));
    std::optional<std::vector<double>> transported;
    if (f) {
        transported.emplace(out.cells().size(), 0.0);
        for (const auto& [c, v] : out_vals)
            (*transported)[std::size_t(out.index_of(c))] = v;
    }
    return {std::move(out), std::move(transported)};
}

inline StrictnessFlags strictness_certificates(const Subgraph& g, Axis axis) {
    StrictnessFlags flags;
    const BoundingBox& bb = g.bbox();
    const SliceAxis sa = axis == Axis::horizontal ? SliceAxis::row : SliceAxis::column;
    const int lo = axis == Axis::horizontal ? bb.ymin : bb.xmin;
    const int hi = axis == Axis::horizontal ? bb.ymax : bb.xmax;
    std::vector<Slice> slices;
    for (int i = lo; i <= hi; ++i) slices.push_back(slice(g, sa, i));
    for (int i = lo; i <= hi; ++i) {
        const Slice& s = slices[std::size_t(i - lo)];
        if (!s.empty() && !slice_contiguous(s)) flags.disconnected_slices.push_back(i);
    }
    for (int i = lo; i < hi; ++i) {
        const Slice& a = slices[std::size_t(i - lo)];
        const Slice& b = slices[std::size_t(i - lo + 1)];
        if (!walls_in(a, b) && !walls_in(b, a))
            flags.mutual_nonwalling.emplace_back(i, i + 1);
    }
    return flags;
}

inline SymmetrizationOutcome symmetrize_axis(const Subgraph& g, Axis axis, Sign sign,
                                             const std::vector<double>* f = nullptr) {
    auto [shape, transported] = symmetrize_axis_core(g, axis, sign, f);
    SymmetrizationOutcome out{std::move(shape), std::move(transported), 0.0, 0.0, {}};
    out.lambda_before = lambda_d(g).lambda_d;
    out.lambda_after = lambda_d(out.output).lambda_d;
    out.flags = strictness_certificates(g, axis);
    return out;
}

inline SymmetrizationOutcome symmetrize_diagonal(const Subgraph& g,
                                                 const std::vector<double>* f = nullptr) {
    auto [shape, transported] = symmetrize_diagonal_core(g, f);
    SymmetrizationOutcome out{std::move(shape), std::move(transported), 0.0, 0.0, {}};
    out.lambda_before = lambda_d(g).lambda_d;
    out.lambda_after = lambda_d(out.output).lambda_d;
    return out;
}

// Transported functions on the symmetrized shape (diagnostic outputs).
inline std::pair<Subgraph, std::vector<double>> transport_horizontal(
    const Subgraph& g, const std::vector<double>& f, Sign sign) {
    auto [shape, vals] = symmetrize_axis_core(g, Axis::horizontal, sign, &f);
    return {std::move(shape), std::move(*vals)};
}

inline std::pair<Subgraph, std::vector<double>> transport_vertical(
    const Subgraph& g, const std::vector<double>& f, Sign sign) {
    auto [shape, vals] = symmetrize_axis_core(g, Axis::vertical, sign, &f);
    return {std::move(shape), std::move(*vals)};
}

inline std::pair<Subgraph, std::vector<double>> transport_diagonal(
    const Subgraph& g, const std::vector<double>& f) {
    auto [shape, vals] = symmetrize_diagonal_core(g, &f);
    return {std::move(shape), std::move(*vals)};
}

// ---- slice Rayleigh energies (f extended by 0 off the subgraph) ----

namespace detail {
inline double value_or_zero(const Subgraph& g, const std::vector<double>& f,
                            const Cell& c) {
    int i = g.index_of(c);
    return i < 0 ? 0.0 : f[std::size_t(i)];
}
}  // namespace detail

// sum over j of (f(j+1, k) - f(j, k))^2
inline double slice_energy_h(const Subgraph& g, const std::vector<double>& f, int k) {
    const BoundingBox& bb = g.bbox();
    double sum = 0.0;
    for (int j = bb.xmin - 1; j <= bb.xmax; ++j) {
        double d = detail::value_or_zero(g, f, Cell{j + 1, k}) -
                   detail::value_or_zero(g, f, Cell{j, k});
        sum += d * d;
    }
    return sum;
}

// sum over j of (f(j, k+1) - f(j, k))^2
inline double slice_energy_v(const Subgraph& g, const std::vector<double>& f, int k) {
    const BoundingBox& bb = g.bbox();
    double sum = 0.0;
    for (int j = bb.xmin; j <= bb.xmax; ++j) {
        double d = detail::value_or_zero(g, f, Cell{j, k + 1}) -
                   detail::value_or_zero(g, f, Cell{j, k});
        sum += d * d;
    }
    return sum;
}

// edges joining diagonal k to diagonal k-1:
// sum over j of (f(j, k+j) - f(j+1, k+j))^2 + (f(j, k+j) - f(j, k+j-1))^2
inline double slice_energy_d(const Subgraph& g, const std::vector<double>& f, int k) {
    const BoundingBox& bb = g.bbox();
    double sum = 0.0;
    for (int j = bb.xmin - 1; j <= bb.xmax + 1; ++j) {
        double center = detail::value_or_zero(g, f, Cell{j, k + j});
        double east = detail::value_or_zero(g, f, Cell{j + 1, k + j});
        double south = detail::value_or_zero(g, f, Cell{j, k + j - 1});
        sum += (center - east) * (center - east);
        sum += (center - south) * (center - south);
    }
    return sum;
}

// numerator of the Rayleigh quotient over the closure of g
inline double rayleigh_numerator(const Subgraph& g, const std::vector<double>& f) {
    DirichletOperator op = assemble(g);
    double num = 0.0;
    for (int i = 0; i < op.size(); ++i) {
        num += op.boundary_edges(i) * f[std::size_t(i)] * f[std::size_t(i)];
        for (int j : op.neighbors[std::size_t(i)])
            if (j > i) {
                double d = f[std::size_t(i)] - f[std::size_t(j)];
                num += d * d;
            }
    }
    return num;
}

}  // namespace fk
