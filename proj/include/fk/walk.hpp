#pragma once

#include <cstdlib>
#include <string>
#include <thread>

#include "fk/rng.hpp"
#include "fk/spectral.hpp"

namespace fk {

// worker count: FK_THREADS if set, else hardware concurrency
inline int worker_count() {
    if (const char* env = std::getenv("FK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// Survival curve of the absorbing walk: p_k = P(still on the subgraph after
// k steps). Probabilities are carried alongside their logs so deep tails
// survive underflow. Z^2 subgraphs are bipartite, so the one-step ratio
// p_{k+1}/p_k oscillates with parity; decay_estimate is the two-step root
// sqrt(p_K / p_{K-2}), which does converge to (4 - lambda_D)/4.
struct SurvivalCurve {
    Cell start;
    std::vector<double> p;      // k = 0..K
    std::vector<double> log_p;  // natural log, -inf once extinct
    double decay_estimate = 0.0;
    long trials = 0;            // 0 for the exact curve
    uint64_t seed = 0;

    int steps() const { return int(p.size()) - 1; }

    void estimate_decay() {
        decay_estimate = 0.0;
        const int K = steps();
        if (K >= 2 && std::isfinite(log_p[std::size_t(K)]) &&
            std::isfinite(log_p[std::size_t(K) - 2]))
            decay_estimate =
                std::exp((log_p[std::size_t(K)] - log_p[std::size_t(K) - 2]) / 2.0);
    }
};

// p_k = || P_D^k e_start ||_1 by repeated sparse application with per-step
// renormalization (never matrix powers).
inline SurvivalCurve survival_exact(const Subgraph& g, const Cell& start, int K) {
    if (!g.contains(start)) throw std::invalid_argument("walk: start cell outside the subgraph");
    if (K < 0) throw std::invalid_argument("walk: negative step count");
    StepOperator pd = assemble_pd(g);
    const std::size_t n = std::size_t(g.size());
    std::vector<double> v(n, 0.0), w(n);
    v[std::size_t(g.index_of(start))] = 1.0;

    SurvivalCurve curve;
    curve.start = start;
    curve.p.assign(std::size_t(K) + 1, 0.0);
    curve.log_p.assign(std::size_t(K) + 1, 0.0);
    curve.p[0] = 1.0;
    double log_mass = 0.0, running = 1.0;
    for (int k = 1; k <= K; ++k) {
        pd.apply(v, w);
        double mass = 0.0;
        for (double x : w) mass += x;
        if (mass <= 0.0) {
            for (int j = k; j <= K; ++j) {
                curve.p[std::size_t(j)] = 0.0;
                curve.log_p[std::size_t(j)] = -std::numeric_limits<double>::infinity();
            }
            break;
        }
        log_mass += std::log(mass);
        running *= mass;  // exact for the hand-counted cases, 0 on underflow
        curve.p[std::size_t(k)] = running;
        curve.log_p[std::size_t(k)] = log_mass;
        const double inv = 1.0 / mass;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] * inv;
    }
    curve.estimate_decay();
    return curve;
}

// Monte Carlo survival frequencies; deterministic per seed, with worker
// streams split by trial block.
inline SurvivalCurve survival_mc(const Subgraph& g, const Cell& start, int K,
                                 long trials, uint64_t seed) {
    if (!g.contains(start)) throw std::invalid_argument("walk: start cell outside the subgraph");
    if (trials < 1) throw std::invalid_argument("walk: trials must be >= 1");
    const int workers = worker_count();
    std::vector<std::vector<long>> alive_upto(std::size_t(workers),
                                              std::vector<long>(std::size_t(K) + 1, 0));

    auto run_block = [&](int w, long lo, long hi) {
        std::vector<long>& hist = alive_upto[std::size_t(w)];
        for (long t = lo; t < hi; ++t) {
            SplitMix64 rng = split_stream(seed, uint64_t(t));
            Cell pos = start;
            int survived = K;
            for (int k = 1; k <= K; ++k) {
                uint64_t bits = rng.next_u64();
                const Cell& step = kNeighborSteps[std::size_t(bits & 3)];
                pos = shifted(pos, step);
                if (!g.contains(pos)) {
                    survived = k - 1;
                    break;
                }
            }
            ++hist[std::size_t(survived)];
        }
    };

    if (workers == 1) {
        run_block(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        long chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long lo = w * chunk, hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_block, w, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }

    std::vector<long> merged(std::size_t(K) + 1, 0);
    for (const auto& hist : alive_upto)
        for (std::size_t k = 0; k < merged.size(); ++k) merged[k] += hist[k];

    SurvivalCurve curve;
    curve.start = start;
    curve.trials = trials;
    curve.seed = seed;
    curve.p.assign(std::size_t(K) + 1, 0.0);
    curve.log_p.assign(std::size_t(K) + 1, 0.0);
    long alive = 0;
    std::vector<long> survivors(std::size_t(K) + 1, 0);
    for (int k = K; k >= 0; --k) {
        alive += merged[std::size_t(k)];
        survivors[std::size_t(k)] = alive;
    }
    for (int k = 0; k <= K; ++k) {
        double p = double(survivors[std::size_t(k)]) / double(trials);
        curve.p[std::size_t(k)] = p;
        curve.log_p[std::size_t(k)] =
            p > 0 ? std::log(p) : -std::numeric_limits<double>::infinity();
    }
    curve.estimate_decay();
    return curve;
}

// 3-sigma binomial band around an estimated survival probability
inline double mc_band(double p_hat, long trials) {
    return 3.0 * std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / double(trials));
}

struct DecayReport {
    double slope_fit = 0.0;       // least-squares slope of log(p^G_k / p^H_k)
    double slope_expected = 0.0;  // log((4 - lambda_G) / (4 - lambda_H))
    bool diverges = false;        // lambda_G < lambda_H
    double lambda_g = 0.0;
    double lambda_h = 0.0;
    int window_lo = 0;
    int window_hi = 0;
};

// Tail-window comparison of two survival curves against the spectral
// prediction. Start cells default to the (y, x)-smallest cell.
inline DecayReport decay_ratio(const Subgraph& g, const Subgraph& h, int K,
                               const Cell* start_g = nullptr,
                               const Cell* start_h = nullptr) {
    if (!is_connected(g) || !is_connected(h))
        throw std::invalid_argument("decay_ratio: subgraphs must be connected");
    DecayReport rep;
    rep.lambda_g = lambda_d(g).lambda_d;
    rep.lambda_h = lambda_d(h).lambda_d;
    if (rep.lambda_g >= 4.0 - 1e-12 || rep.lambda_h >= 4.0 - 1e-12)
        throw std::invalid_argument("decay_ratio: lambda_D = 4 walk dies immediately");
    rep.slope_expected = std::log((4.0 - rep.lambda_g) / (4.0 - rep.lambda_h));
    rep.diverges = rep.lambda_g < rep.lambda_h;

    SurvivalCurve cg = survival_exact(g, start_g ? *start_g : g.cells()[0], K);
    SurvivalCurve ch = survival_exact(h, start_h ? *start_h : h.cells()[0], K);
    rep.window_lo = K / 2;
    rep.window_hi = K;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = 0;
    for (int k = rep.window_lo; k <= rep.window_hi; ++k) {
        double y = cg.log_p[std::size_t(k)] - ch.log_p[std::size_t(k)];
        sx += k;
        sy += y;
        sxx += double(k) * k;
        sxy += double(k) * y;
        ++cnt;
    }
    rep.slope_fit = (double(cnt) * sxy - sx * sy) / (double(cnt) * sxx - sx * sx);
    return rep;
}

}  // namespace fk
