#pragma once

#include <cmath>

#include "fk/enumerate.hpp"
#include "fk/spectral.hpp"

namespace fk {

enum class SearchMode { exhaustive, pruned };

struct MinimizerAudit {
    bool connected = false;
    bool strongly_connected = false;
    bool walled_in = false;
    bool simply_connected = false;

    bool all() const {
        return connected && strongly_connected && walled_in && simply_connected;
    }
};

struct MinimizerRecord {
    int n = 0;
    double lambda_min = 0.0;
    std::vector<Subgraph> minimizers;  // free canonical forms
    std::vector<MinimizerAudit> audited;
    long enumerated_count = 0;
    SearchMode mode = SearchMode::exhaustive;
};

inline constexpr double kTieTol = 1e-9;

inline MinimizerAudit audit_shape(const Subgraph& g) {
    return MinimizerAudit{is_connected(g), is_strongly_connected(g),
                          is_walled_in(g), is_simply_connected(g)};
}

// Exact minimum of lambda_D over free polyominoes of size n. Pruned mode
// only eigensolves strongly connected, walled-in candidates; this is sound
// for the minimum because minimizers satisfy both predicates.
inline MinimizerRecord find_minimizers(int n, SearchMode mode = SearchMode::exhaustive,
                                       double tie_tol = kTieTol) {
    MinimizerRecord rec;
    rec.n = n;
    rec.mode = mode;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, Subgraph>> close;  // within tie_tol of best
    enumerate_polyominoes(n, EnumMode::free, [&](const Subgraph& g) {
        ++rec.enumerated_count;
        if (mode == SearchMode::pruned &&
            !(is_strongly_connected(g) && is_walled_in(g)))
            return;
        double lam = lambda_d_dense(g);
        if (lam < best) {
            best = lam;
            std::erase_if(close, [&](const auto& p) { return p.first > best + tie_tol; });
        }
        if (lam <= best + tie_tol) close.emplace_back(lam, g);
    });
    rec.lambda_min = best;
    for (const auto& [lam, g] : close)
        if (lam <= best + tie_tol) {
            rec.minimizers.push_back(g);
            rec.audited.push_back(audit_shape(g));
        }
    return rec;
}

// Records for n = 1..n_max; lambda_D^(n) must decrease strictly.
inline std::vector<MinimizerRecord> minimizer_table(int n_max,
                                                    SearchMode mode = SearchMode::exhaustive) {
    std::vector<MinimizerRecord> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(find_minimizers(n, mode));
        if (n > 1 && !(out.back().lambda_min < out[out.size() - 2].lambda_min))
            throw std::logic_error("minimizer table: lambda_D^(n) not strictly decreasing");
    }
    return out;
}

// Diameter of the associated union-of-squares domain over sqrt(n).
inline double diameter_ratio(const Subgraph& g) {
    double best = 0.0;
    const std::vector<Cell>& cells = g.cells();
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i; j < cells.size(); ++j) {
            double dx = std::abs(cells[i].x - cells[j].x) + 1.0;
            double dy = std::abs(cells[i].y - cells[j].y) + 1.0;
            best = std::max(best, dx * dx + dy * dy);
        }
    return std::sqrt(best) / std::sqrt(double(g.size()));
}

}  // namespace fk
