#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fk/cell.hpp"

namespace fk {

struct BoundingBox {
    int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    int width() const { return xmax - xmin + 1; }
    int height() const { return ymax - ymin + 1; }
};

// Finite induced subgraph of Z^2. Cells are deduplicated, kept sorted by
// (y, x), and mirrored in a hash set for O(1) membership. Immutable after
// construction; nonempty by contract.
class Subgraph {
public:
    explicit Subgraph(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        if (cells_.empty()) throw std::invalid_argument("empty shape");
        bbox_ = {cells_[0].x, cells_[0].x, cells_[0].y, cells_[0].y};
        for (const Cell& c : cells_) {
            bbox_.xmin = std::min(bbox_.xmin, c.x);
            bbox_.xmax = std::max(bbox_.xmax, c.x);
            bbox_.ymin = std::min(bbox_.ymin, c.y);
            bbox_.ymax = std::max(bbox_.ymax, c.y);
            members_.insert(c);
        }
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return int(cells_.size()); }
    const BoundingBox& bbox() const { return bbox_; }
    bool contains(const Cell& c) const { return members_.count(c) != 0; }

    // index of c in the sorted cell list, or -1
    int index_of(const Cell& c) const {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || !(*it == c)) return -1;
        return int(it - cells_.begin());
    }

    friend bool operator==(const Subgraph& a, const Subgraph& b) {
        return a.cells_ == b.cells_;
    }

private:
    std::vector<Cell> cells_;
    std::unordered_set<Cell, CellHash> members_;
    BoundingBox bbox_;
};

inline constexpr std::array<Cell, 4> kNeighborSteps = {
    Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}};

inline Cell shifted(const Cell& c, const Cell& d) {
    return Cell{c.x + d.x, c.y + d.y};
}

// Exterior boundary: cells outside g adjacent to g, sorted by (y, x).
inline std::vector<Cell> boundary(const Subgraph& g) {
    std::unordered_set<Cell, CellHash> out;
    for (const Cell& c : g.cells())
        for (const Cell& d : kNeighborSteps) {
            Cell b = shifted(c, d);
            if (!g.contains(b)) out.insert(b);
        }
    std::vector<Cell> v(out.begin(), out.end());
    std::sort(v.begin(), v.end());
    return v;
}

enum class SliceAxis { row, column, diagonal };

// One slice of a subgraph: a row {y = index}, a column {x = index}, or a
// diagonal {y = x + index}. Rows and diagonals are ordered by x, columns by y.
struct Slice {
    SliceAxis axis = SliceAxis::row;
    int index = 0;
    std::vector<Cell> cells;

    bool empty() const { return cells.empty(); }
    int length() const { return int(cells.size()); }
};

inline Slice slice(const Subgraph& g, SliceAxis axis, int index) {
    Slice s{axis, index, {}};
    for (const Cell& c : g.cells()) {
        switch (axis) {
            case SliceAxis::row:
                if (c.y == index) s.cells.push_back(c);
                break;
            case SliceAxis::column:
                if (c.x == index) s.cells.push_back(c);
                break;
            case SliceAxis::diagonal:
                if (c.y == c.x + index) s.cells.push_back(c);
                break;
        }
    }
    std::sort(s.cells.begin(), s.cells.end(), [&](const Cell& a, const Cell& b) {
        return axis == SliceAxis::column ? a.y < b.y : a.x < b.x;
    });
    return s;
}

namespace detail {
// coordinate that varies along a row/column slice
inline int running_coord(const Slice& s, const Cell& c) {
    return s.axis == SliceAxis::column ? c.y : c.x;
}
}  // namespace detail

inline bool slice_contiguous(const Slice& s) {
    for (std::size_t i = 1; i < s.cells.size(); ++i)
        if (detail::running_coord(s, s.cells[i]) !=
            detail::running_coord(s, s.cells[i - 1]) + 1)
            return false;
    return true;
}

// Does slice a wall in slice b: every coordinate occupied along b is occupied
// along a. Slices must be parallel rows or parallel columns.
inline bool walls_in(const Slice& a, const Slice& b) {
    if (a.axis != b.axis || a.axis == SliceAxis::diagonal)
        throw std::invalid_argument("walls_in requires two rows or two columns");
    std::unordered_set<int> have;
    for (const Cell& c : a.cells) have.insert(detail::running_coord(a, c));
    for (const Cell& c : b.cells)
        if (!have.count(detail::running_coord(b, c))) return false;
    return true;
}

inline bool is_connected(const Subgraph& g) {
    std::vector<Cell> stack = {g.cells()[0]};
    std::unordered_set<Cell, CellHash> seen = {g.cells()[0]};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (const Cell& d : kNeighborSteps) {
            Cell nb = shifted(c, d);
            if (g.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
        }
    }
    return int(seen.size()) == g.size();
}

// HV-convexity: every row and column slice is a contiguous interval.
inline bool is_strongly_connected(const Subgraph& g) {
    const BoundingBox& bb = g.bbox();
    for (int y = bb.ymin; y <= bb.ymax; ++y)
        if (!slice_contiguous(slice(g, SliceAxis::row, y))) return false;
    for (int x = bb.xmin; x <= bb.xmax; ++x)
        if (!slice_contiguous(slice(g, SliceAxis::column, x))) return false;
    return true;
}

// Strongly connected, one row walls in all rows, one column walls in all
// columns.
inline bool is_walled_in(const Subgraph& g) {
    if (!is_strongly_connected(g)) return false;
    const BoundingBox& bb = g.bbox();
    std::vector<Slice> rows, cols;
    for (int y = bb.ymin; y <= bb.ymax; ++y) rows.push_back(slice(g, SliceAxis::row, y));
    for (int x = bb.xmin; x <= bb.xmax; ++x) cols.push_back(slice(g, SliceAxis::column, x));
    auto has_dominator = [](const std::vector<Slice>& slices) {
        for (const Slice& a : slices) {
            bool all = true;
            for (const Slice& b : slices)
                if (!walls_in(a, b)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    };
    return has_dominator(rows) && has_dominator(cols);
}

// No enclosed holes: the complement is fully reachable from the frame of the
// bounding box inflated by one cell.
inline bool is_simply_connected(const Subgraph& g) {
    const BoundingBox& bb = g.bbox();
    const int x0 = bb.xmin - 1, x1 = bb.xmax + 1;
    const int y0 = bb.ymin - 1, y1 = bb.ymax + 1;
    const int w = x1 - x0 + 1, h = y1 - y0 + 1;
    std::vector<uint8_t> seen(std::size_t(w) * std::size_t(h), 0);
    auto at = [&](int x, int y) -> uint8_t& {
        return seen[std::size_t(y - y0) * std::size_t(w) + std::size_t(x - x0)];
    };
    std::vector<Cell> stack = {Cell{x0, y0}};
    at(x0, y0) = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (const Cell& d : kNeighborSteps) {
            Cell nb = shifted(c, d);
            if (nb.x < x0 || nb.x > x1 || nb.y < y0 || nb.y > y1) continue;
            if (g.contains(nb) || at(nb.x, nb.y)) continue;
            at(nb.x, nb.y) = 1;
            ++reached;
            stack.push_back(nb);
        }
    }
    return reached == std::size_t(w) * std::size_t(h) - std::size_t(g.size());
}

inline Subgraph transform(const Subgraph& g, const D4Element& t) {
    std::vector<Cell> out;
    out.reserve(g.cells().size());
    for (const Cell& c : g.cells()) out.push_back(t.apply(c));
    return Subgraph(std::move(out));
}

inline Subgraph translated(const Subgraph& g, int dx, int dy) {
    return transform(g, D4Element{0, dx, dy});
}

enum class CanonicalMode { fixed, free };

namespace detail {
// cells translated so the bounding box corner sits at the origin
inline std::vector<Cell> anchored_cells(const Subgraph& g) {
    std::vector<Cell> v;
    v.reserve(g.cells().size());
    for (const Cell& c : g.cells())
        v.push_back(Cell{c.x - g.bbox().xmin, c.y - g.bbox().ymin});
    return v;
}

inline bool cells_less(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
}  // namespace detail

// Representative invariant under translation (fixed mode) or under
// translation plus all 8 point symmetries (free mode): the (y, x)-lex
// smallest anchored cell list among the candidates.
inline Subgraph canonical_form(const Subgraph& g,
                               CanonicalMode mode = CanonicalMode::fixed) {
    std::vector<Cell> best = detail::anchored_cells(g);
    if (mode == CanonicalMode::free) {
        for (int op = 1; op < 8; ++op) {
            std::vector<Cell> cand =
                detail::anchored_cells(transform(g, D4Element{op, 0, 0}));
            if (detail::cells_less(cand, best)) best = std::move(cand);
        }
    }
    return Subgraph(std::move(best));
}

// All D4-with-translation elements mapping the cell set onto itself.
inline std::vector<D4Element> automorphisms(const Subgraph& g) {
    std::vector<D4Element> out;
    for (int op = 0; op < 8; ++op) {
        Subgraph image = transform(g, D4Element{op, 0, 0});
        D4Element e{op, g.bbox().xmin - image.bbox().xmin,
                    g.bbox().ymin - image.bbox().ymin};
        bool ok = true;
        for (const Cell& c : g.cells())
            if (!g.contains(e.apply(c))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(e);
    }
    return out;
}

// Connected components as index lists into g.cells(), each sorted.
inline std::vector<std::vector<int>> components(const Subgraph& g) {
    std::vector<int> comp(g.cells().size(), -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < g.size(); ++i) {
        if (comp[std::size_t(i)] >= 0) continue;
        std::vector<int> stack = {i};
        comp[std::size_t(i)] = int(out.size());
        std::vector<int> members = {i};
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            for (const Cell& d : kNeighborSteps) {
                int j = g.index_of(shifted(g.cells()[std::size_t(k)], d));
                if (j >= 0 && comp[std::size_t(j)] < 0) {
                    comp[std::size_t(j)] = int(out.size());
                    stack.push_back(j);
                    members.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace fk
