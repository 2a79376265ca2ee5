#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace fk {

// Lattice vertex of Z^2. Also stands for the closed unit square centered at
// (x, y) when a subgraph is read as a plane domain.
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

// Canonical ordering everywhere in this library: by (y, x).
constexpr bool operator<(const Cell& a, const Cell& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

constexpr bool adjacent(const Cell& a, const Cell& b) {
    const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx + dy == 1;
}

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        // splitmix-style mix of the packed coordinates
        uint64_t z = (uint64_t(uint32_t(c.x)) << 32) | uint64_t(uint32_t(c.y));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return std::size_t(z ^ (z >> 31));
    }
};

// The 8 orthogonal symmetries of Z^2 fixing the origin, as 2x2 integer
// matrices (a b; c d) acting by (x, y) -> (a x + b y, c x + d y).
inline constexpr std::array<std::array<int, 4>, 8> kD4Linear = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 0},   // rotation 90
    {-1, 0, 0, -1},  // rotation 180
    {0, 1, -1, 0},   // rotation 270
    {1, 0, 0, -1},   // reflection about the x axis
    {0, 1, 1, 0},    // reflection about y = x
    {-1, 0, 0, 1},   // reflection about the y axis
    {0, -1, -1, 0},  // reflection about y = -x
}};

// One of the 8 point symmetries composed with an integer translation.
struct D4Element {
    int op = 0;  // index into kD4Linear
    int tx = 0;
    int ty = 0;

    friend constexpr bool operator==(const D4Element&, const D4Element&) = default;

    constexpr Cell apply(const Cell& c) const {
        const auto& l = kD4Linear[std::size_t(op)];
        return Cell{l[0] * c.x + l[1] * c.y + tx, l[2] * c.x + l[3] * c.y + ty};
    }
};

namespace detail {
constexpr int d4_index(const std::array<int, 4>& m) {
    for (int i = 0; i < 8; ++i)
        if (kD4Linear[std::size_t(i)] == m) return i;
    throw std::logic_error("not a D4 matrix");
}
}  // namespace detail

// (a compose b)(p) = a(b(p))
constexpr D4Element compose(const D4Element& a, const D4Element& b) {
    const auto& ma = kD4Linear[std::size_t(a.op)];
    const auto& mb = kD4Linear[std::size_t(b.op)];
    const std::array<int, 4> m = {
        ma[0] * mb[0] + ma[1] * mb[2], ma[0] * mb[1] + ma[1] * mb[3],
        ma[2] * mb[0] + ma[3] * mb[2], ma[2] * mb[1] + ma[3] * mb[3]};
    return D4Element{detail::d4_index(m),
                     ma[0] * b.tx + ma[1] * b.ty + a.tx,
                     ma[2] * b.tx + ma[3] * b.ty + a.ty};
}

constexpr D4Element inverse(const D4Element& e) {
    // orthogonal integer matrix: inverse = transpose
    const auto& m = kD4Linear[std::size_t(e.op)];
    const std::array<int, 4> mi = {m[0], m[2], m[1], m[3]};
    return D4Element{detail::d4_index(mi),
                     -(mi[0] * e.tx + mi[1] * e.ty),
                     -(mi[2] * e.tx + mi[3] * e.ty)};
}

}  // namespace fk
