#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "fk/subgraph.hpp"

namespace fk {

inline constexpr int kEnumerationCap = 14;

enum class EnumMode { fixed, free };

namespace detail {

// Redelmeier growth: shapes are anchored so the first cell is the (y, x)
// minimum; cells live in y >= 0, with x >= 0 forced on row 0. Frontier
// cells tried once and then barred from deeper branches.
class Redelmeier {
public:
    Redelmeier(int n, EnumMode mode, const std::function<void(const Subgraph&)>& emit)
        : n_(n), mode_(mode), emit_(emit), width_(2 * n + 1), height_(n + 1) {
        state_.assign(std::size_t(width_) * std::size_t(height_), 0);
    }

    void run() {
        current_.clear();
        try_cell(n_ - 1, 0);  // (0, 0) in shape coordinates
        at(n_ - 1, 0) = 0;
    }

private:
    // grid x index = shape x + (n - 1)
    uint8_t& at(int gx, int gy) {
        return state_[std::size_t(gy) * std::size_t(width_) + std::size_t(gx)];
    }

    bool allowed(int gx, int gy) const {
        if (gx < 0 || gx >= width_ || gy < 0 || gy >= height_) return false;
        if (gy == 0 && gx < n_ - 1) return false;  // left of the anchor on row 0
        return true;
    }

    void emit_current() {
        std::vector<Cell> cells;
        cells.reserve(current_.size());
        for (const auto& [gx, gy] : current_) cells.push_back(Cell{gx - (n_ - 1), gy});
        Subgraph g(std::move(cells));
        Subgraph anchored = canonical_form(g, CanonicalMode::fixed);
        if (mode_ == EnumMode::free &&
            !(canonical_form(g, CanonicalMode::free) == anchored))
            return;
        emit_(anchored);
    }

    void try_cell(int gx, int gy) {
        at(gx, gy) = 1;  // occupied
        current_.emplace_back(gx, gy);
        if (int(current_.size()) == n_) {
            emit_current();
        } else {
            const int dx[4] = {1, -1, 0, 0};
            const int dy[4] = {0, 0, 1, -1};
            std::vector<std::pair<int, int>> tried_here;
            for (std::size_t i = 0; i < current_.size(); ++i) {
                auto [cx, cy] = current_[i];
                for (int d = 0; d < 4; ++d) {
                    int nx = cx + dx[d], ny = cy + dy[d];
                    if (!allowed(nx, ny) || at(nx, ny) != 0) continue;
                    try_cell(nx, ny);
                    at(nx, ny) = 2;  // barred for the rest of this branch
                    tried_here.emplace_back(nx, ny);
                }
            }
            for (const auto& [bx, by] : tried_here) at(bx, by) = 0;
        }
        current_.pop_back();
        at(gx, gy) = 0;
    }

    int n_;
    EnumMode mode_;
    const std::function<void(const Subgraph&)>& emit_;
    int width_, height_;
    std::vector<uint8_t> state_;
    std::vector<std::pair<int, int>> current_;
};

}  // namespace detail

// Visits every connected polyomino of size n exactly once, up to translation
// (fixed) or up to translation plus the 8 point symmetries (free). Shapes
// arrive anchored with xmin = ymin = 0.
inline void enumerate_polyominoes(int n, EnumMode mode,
                                  const std::function<void(const Subgraph&)>& visit) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("enumerate: size cap exceeded");
    detail::Redelmeier(n, mode, visit).run();
}

inline std::vector<Subgraph> enumerate_collect(int n, EnumMode mode) {
    std::vector<Subgraph> out;
    enumerate_polyominoes(n, mode, [&](const Subgraph& g) { out.push_back(g); });
    return out;
}

inline long enumerate_count(int n, EnumMode mode) {
    long count = 0;
    enumerate_polyominoes(n, mode, [&](const Subgraph&) { ++count; });
    return count;
}

}  // namespace fk
