#pragma once

#include "fk/fd.hpp"
#include "fk/mask.hpp"
#include "fk/spectral.hpp"

namespace fk {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kBesselJ01 = 2.40482555769577276862;
// first Dirichlet eigenvalue of the disk of area 1
inline const double kDiskLambda = kPi * kBesselJ01 * kBesselJ01;

// Greedy disk approximation: grow by minimal Euclidean norm, ties broken by
// (norm^2, x, y) ascending.
inline Subgraph discrete_disk(int n) {
    if (n < 1) throw std::invalid_argument("discrete_disk: n must be >= 1");
    const int r = int(std::ceil(std::sqrt(double(n) / kPi))) + 2;
    struct Entry {
        long norm2;
        int x, y;
    };
    std::vector<Entry> candidates;
    candidates.reserve(std::size_t(2 * r + 1) * std::size_t(2 * r + 1));
    for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y)
            candidates.push_back({long(x) * x + long(y) * y, x, y});
    std::sort(candidates.begin(), candidates.end(), [](const Entry& a, const Entry& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    std::vector<Cell> cells;
    cells.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i)
        cells.push_back({candidates[std::size_t(i)].x, candidates[std::size_t(i)].y});
    return Subgraph(std::move(cells));
}

struct GaussCount {
    long count = 0;
    double lower = 0.0;
    double upper = 0.0;

    bool within_bounds() const { return lower <= double(count) && double(count) <= upper; }
};

// Lattice points inside the open disk of area n about the origin, with the
// n +- (sqrt(n pi) + pi/4) bracket. x^2 + y^2 = n/pi has no integer
// solutions, so open vs closed is immaterial; the comparison runs in long
// double to keep boundary cases exact.
inline GaussCount gauss_count(long n) {
    if (n < 1) throw std::invalid_argument("gauss_count: n must be >= 1");
    const long double r2 = (long double)(n) / 3.14159265358979323846264338328L;
    long count = 0;
    const int ymax = int(std::sqrt((double)r2)) + 1;
    for (int y = -ymax; y <= ymax; ++y) {
        long double rem = r2 - (long double)(y) * y;
        if (rem <= 0) continue;
        int xmax = int(std::sqrt((double)rem)) + 1;
        while ((long double)(xmax) * xmax >= rem) --xmax;  // largest x with x^2 < rem
        if (xmax >= 0) count += 2 * xmax + 1;
    }
    GaussCount out;
    out.count = count;
    const double root = std::sqrt(double(n) * kPi);
    out.lower = double(n) - root + kPi / 4.0;
    out.upper = double(n) + root + kPi / 4.0;
    return out;
}

// Oriented area sweep for all 1 <= n <= n_max at once (histogram of the
// smallest n containing each lattice point).
inline std::vector<long> gauss_counts_upto(long n_max) {
    std::vector<long> first_n(std::size_t(n_max) + 2, 0);
    const long double pi_l = 3.14159265358979323846264338328L;
    const int rmax = int(std::sqrt((double)((long double)n_max / pi_l))) + 1;
    for (int x = -rmax; x <= rmax; ++x)
        for (int y = -rmax; y <= rmax; ++y) {
            long double q = pi_l * ((long double)(x) * x + (long double)(y) * y);
            long n0 = long(q) + 1;  // smallest integer n with n > pi (x^2+y^2)
            if (n0 <= n_max) ++first_n[std::size_t(n0)];
        }
    std::vector<long> counts(std::size_t(n_max) + 1, 0);
    long running = 0;
    for (long n = 1; n <= n_max; ++n) {
        running += first_n[std::size_t(n)];
        counts[std::size_t(n)] = running;
    }
    return counts;
}

// Area of (G* symmetric-difference area-1 disk at the centroid of G*) by
// midpoint sampling at the given resolution; deterministic.
inline double symdiff_vs_disk(const Subgraph& g, int samples_per_unit = 512,
                              bool refine_center = false) {
    if (samples_per_unit < 1)
        throw std::invalid_argument("symdiff_vs_disk: bad resolution");
    const double root_n = std::sqrt(double(g.size()));
    double cx = 0.0, cy = 0.0;
    for (const Cell& c : g.cells()) {
        cx += c.x;
        cy += c.y;
    }
    cx /= double(g.size()) * root_n;
    cy /= double(g.size()) * root_n;
    const double r = 1.0 / std::sqrt(kPi);

    auto measure = [&](double ox, double oy) {
        const BoundingBox& bb = g.bbox();
        double x0 = std::min((bb.xmin - 0.5) / root_n, ox - r);
        double x1 = std::max((bb.xmax + 0.5) / root_n, ox + r);
        double y0 = std::min((bb.ymin - 0.5) / root_n, oy - r);
        double y1 = std::max((bb.ymax + 0.5) / root_n, oy + r);
        const double h = 1.0 / samples_per_unit;
        const int nx = int(std::ceil((x1 - x0) / h));
        const int ny = int(std::ceil((y1 - y0) / h));
        long mismatch = 0;
        for (int j = 0; j < ny; ++j) {
            double py = y0 + (j + 0.5) * h;
            double ly = py * root_n;
            for (int i = 0; i < nx; ++i) {
                double px = x0 + (i + 0.5) * h;
                bool in_g = g.contains(
                    Cell{int(std::lround(px * root_n)), int(std::lround(ly))});
                double dx = px - ox, dy = py - oy;
                bool in_disk = dx * dx + dy * dy < r * r;
                if (in_g != in_disk) ++mismatch;
            }
        }
        return double(mismatch) * h * h;
    };

    double best = measure(cx, cy);
    if (refine_center) {
        const double step = 0.25 / root_n;
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2; dy <= 2; ++dy) {
                if (dx == 0 && dy == 0) continue;
                best = std::min(best, measure(cx + dx * step, cy + dy * step));
            }
    }
    return best;
}

// area of the 2/sqrt(n)-dilation beyond G*, from aligned masks
inline double dilation_symdiff(const Subgraph& g, int m = 16) {
    const int pad = 2 * m + 1;
    RefinedMask dilated = build_mask(g, m, 2.0, pad);
    RefinedMask plain = build_mask(g, m, 0.0, pad);
    return mask_diff_area(dilated, plain);
}

enum class BoundStatus { holds, holds_within_uncertainty, violated, out_of_domain };

struct SandwichSide {
    double rhs_central = 0.0;
    double rhs_lo = 0.0;       // bound evaluated at the unfavorable end
    double rhs_hi = 0.0;
    double margin_central = 0.0;
    BoundStatus status = BoundStatus::out_of_domain;
};

struct SandwichReport {
    int n = 0;
    double lambda_discrete = 0.0;
    FdEstimate star;  // lambda(G*)
    FdEstimate ball;  // lambda(B^l1_{2/sqrt(n)}(G*))
    SandwichSide upper;
    SandwichSide lower;

    bool conclusive_ok() const {
        return (upper.status == BoundStatus::holds ||
                upper.status == BoundStatus::holds_within_uncertainty) &&
               (lower.status == BoundStatus::holds ||
                lower.status == BoundStatus::holds_within_uncertainty);
    }
};

// Evaluates both halves of the eigenvalue sandwich with finite-difference
// continuum values at refinements m and 2m.
inline SandwichReport sandwich_check(const Subgraph& g, int m) {
    SandwichReport rep;
    rep.n = g.size();
    rep.lambda_discrete = lambda_d(g).lambda_d;
    rep.star = fd_richardson(g, m, 0.0);
    rep.ball = fd_richardson(g, m, 2.0);
    const double n = double(g.size());
    const double pi2n = kPi * kPi * n;

    // upper: lambda_D <= pi^2 L / (pi^2 n - L), increasing in L on (0, pi^2 n)
    {
        SandwichSide& s = rep.upper;
        double lo = rep.star.value - rep.star.uncertainty;
        double hi = rep.star.value + rep.star.uncertainty;
        if (hi >= pi2n) {
            s.status = BoundStatus::out_of_domain;
        } else {
            auto rhs = [&](double L) { return kPi * kPi * L / (pi2n - L); };
            s.rhs_central = rhs(rep.star.value);
            s.rhs_lo = rhs(lo);
            s.rhs_hi = rhs(hi);
            s.margin_central = s.rhs_central - rep.lambda_discrete;
            if (rep.lambda_discrete <= s.rhs_lo)
                s.status = BoundStatus::holds;
            else if (rep.lambda_discrete <= s.rhs_hi)
                s.status = BoundStatus::holds_within_uncertainty;
            else
                s.status = BoundStatus::violated;
        }
    }
    // lower: lambda_D >= L / (n + (5/12) L), increasing in L
    {
        SandwichSide& s = rep.lower;
        double lo = std::max(rep.ball.value - rep.ball.uncertainty, 0.0);
        double hi = rep.ball.value + rep.ball.uncertainty;
        auto rhs = [&](double L) { return L / (n + (5.0 / 12.0) * L); };
        s.rhs_central = rhs(rep.ball.value);
        s.rhs_lo = rhs(lo);
        s.rhs_hi = rhs(hi);
        s.margin_central = rep.lambda_discrete - s.rhs_central;
        if (rep.lambda_discrete >= s.rhs_hi)
            s.status = BoundStatus::holds;
        else if (rep.lambda_discrete >= s.rhs_lo)
            s.status = BoundStatus::holds_within_uncertainty;
        else
            s.status = BoundStatus::violated;
    }
    return rep;
}

struct DiskReport {
    int n = 0;
    double lambda_discrete = 0.0;        // n * lambda_D(D_n)
    double lambda_fd = 0.0;              // fd lambda(D_n*), 0 when skipped
    double lambda_continuum_target = 0.0;
    double symdiff_area = 0.0;
    double centroid_x = 0.0, centroid_y = 0.0;
};

// Convergence experiment on the greedy discrete disks; m = 0 skips the
// finite-difference line.
inline std::vector<DiskReport> disk_convergence(const std::vector<int>& n_list, int m,
                                                int samples_per_unit = 512) {
    std::vector<DiskReport> out;
    for (int n : n_list) {
        Subgraph d = discrete_disk(n);
        DiskReport rep;
        rep.n = n;
        rep.lambda_discrete = double(n) * lambda_d(d).lambda_d;
        rep.lambda_continuum_target = kDiskLambda;
        if (m >= 1) rep.lambda_fd = fd_lambda(build_mask(d, m, 0.0));
        rep.symdiff_area = symdiff_vs_disk(d, samples_per_unit);
        double cx = 0.0, cy = 0.0;
        for (const Cell& c : d.cells()) {
            cx += c.x;
            cy += c.y;
        }
        const double root_n = std::sqrt(double(n));
        rep.centroid_x = cx / double(n) / root_n;
        rep.centroid_y = cy / double(n) / root_n;
        out.push_back(rep);
    }
    return out;
}

}  // namespace fk
