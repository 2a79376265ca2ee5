#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fk {

// Permutations are 0-based value indices; positions l, m in the switch
// operator follow the 1-based convention of the slice diagrams.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

namespace detail {
inline void require_sorted_nonneg(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) throw std::invalid_argument(std::string(what) + ": negative value");
        if (i > 0 && v[i] < v[i - 1])
            throw std::invalid_argument(std::string(what) + ": values not ascending");
    }
}
}  // namespace detail

// Path cost: nonnegative x_1 <= ... <= x_n placed on the interior of an
// (n+2)-vertex path with fixed endpoint values e0, e_last <= min x.
struct HatCost {
    std::vector<double> xs;
    double e0 = 0.0;
    double e_last = 0.0;

    int n() const { return int(xs.size()); }

    void validate() const {
        detail::require_sorted_nonneg(xs, "rhat");
        if (e0 < 0.0 || e_last < 0.0)
            throw std::invalid_argument("rhat: negative endpoint");
        if (!xs.empty() && (e0 > xs.front() || e_last > xs.front()))
            throw std::invalid_argument("rhat: endpoint exceeds smallest value");
    }

    double cost(const Perm& p) const {
        if (p.size() != xs.size()) throw std::invalid_argument("rhat: length mismatch");
        double prev = e0, sum = 0.0;
        for (int idx : p) {
            double cur = xs[std::size_t(idx)];
            sum += (prev - cur) * (prev - cur);
            prev = cur;
        }
        sum += (prev - e_last) * (prev - e_last);
        return sum;
    }
};

// Pairing cost between two ascending lists of equal length.
struct TildeCost {
    std::vector<double> xs;
    std::vector<double> ys;

    int n() const { return int(xs.size()); }

    void validate() const {
        detail::require_sorted_nonneg(xs, "rtilde");
        detail::require_sorted_nonneg(ys, "rtilde");
        if (xs.size() != ys.size())
            throw std::invalid_argument("rtilde: length mismatch");
    }

    double cost(const Perm& p) const {
        if (p.size() != xs.size() || xs.size() != ys.size())
            throw std::invalid_argument("rtilde: length mismatch");
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double d = xs[i] - ys[std::size_t(p[i])];
            sum += d * d;
        }
        return sum;
    }
};

// Zigzag cost between adjacent diagonal slices:
// y0 - x_{i_1} - y_{j_1} - x_{i_2} - ... - x_{i_n} - y_{j_n} - x0,
// with dominated endpoints x0 <= x_1, y0 <= y_1.
struct BarCost {
    std::vector<double> xs;
    std::vector<double> ys;
    double x0 = 0.0;
    double y0 = 0.0;

    int n() const { return int(xs.size()); }

    void validate() const {
        detail::require_sorted_nonneg(xs, "rbar");
        detail::require_sorted_nonneg(ys, "rbar");
        if (xs.size() != ys.size()) throw std::invalid_argument("rbar: length mismatch");
        if (x0 < 0.0 || y0 < 0.0) throw std::invalid_argument("rbar: negative endpoint");
        if (!xs.empty() && x0 > xs.front())
            throw std::invalid_argument("rbar: x endpoint exceeds smallest value");
        if (!ys.empty() && y0 > ys.front())
            throw std::invalid_argument("rbar: y endpoint exceeds smallest value");
    }

    double cost(const Perm& pi, const Perm& pj) const {
        if (pi.size() != xs.size() || pj.size() != ys.size() || xs.size() != ys.size())
            throw std::invalid_argument("rbar: length mismatch");
        const std::size_t m = pi.size();
        double sum = 0.0, prev = y0;
        for (std::size_t t = 0; t < m; ++t) {
            double xv = xs[std::size_t(pi[t])];
            double yv = ys[std::size_t(pj[t])];
            sum += (xv - prev) * (xv - prev);
            sum += (xv - yv) * (xv - yv);
            prev = yv;
        }
        sum += (prev - x0) * (prev - x0);
        return sum;
    }
};

inline double rhat(const HatCost& c, const Perm& p) { return c.cost(p); }
inline double rtilde(const TildeCost& c, const Perm& p) { return c.cost(p); }
inline double rbar(const BarCost& c, const Perm& pi, const Perm& pj) {
    return c.cost(pi, pj);
}

// Segment reversal S_(l,m) with 1-based positions, 1 <= l <= m <= n.
inline Perm switch_segment(const Perm& p, int l, int m) {
    if (l < 1 || m < l || m > int(p.size()))
        throw std::invalid_argument("switch_segment: indices out of range");
    Perm q = p;
    std::reverse(q.begin() + (l - 1), q.begin() + m);
    return q;
}

// J_R: the largest value at position ceil(n/2), then filling right, left,
// right, ... with descending values. J_L is its mirror image.
inline Perm perm_jr(int n) {
    Perm p(static_cast<std::size_t>(n), -1);
    int center = (n + 1) / 2;       // 1-based
    int right = center + 1, left = center - 1;
    p[std::size_t(center - 1)] = n - 1;
    for (int v = n - 2; v >= 0;) {
        if (right <= n) p[std::size_t(right++ - 1)] = v--;
        if (v >= 0 && left >= 1) p[std::size_t(left-- - 1)] = v--;
    }
    return p;
}

inline Perm perm_jl(int n) {
    Perm r = perm_jr(n);
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[std::size_t(i)] = r[std::size_t(n - 1 - i)];
    return p;
}

// Claimed minimizer of the zigzag cost: I fills 1, 3, 5, ... from the left
// end inward and even indices back out; J is the same pattern anchored at
// the right end.
struct PermPair {
    Perm I;
    Perm J;
};

inline PermPair perm_diag_pair(int n) {
    PermPair out{Perm(static_cast<std::size_t>(n), -1), Perm(static_cast<std::size_t>(n), -1)};
    {
        int left = 1, right = n, v = 0;
        bool at_left = true;
        while (v < n) {
            if (at_left)
                out.I[std::size_t(left++ - 1)] = v++;
            else
                out.I[std::size_t(right-- - 1)] = v++;
            at_left = !at_left;
        }
    }
    {
        int left = 1, right = n, v = 0;
        bool at_right = true;
        while (v < n) {
            if (at_right)
                out.J[std::size_t(right-- - 1)] = v++;
            else
                out.J[std::size_t(left++ - 1)] = v++;
            at_right = !at_right;
        }
    }
    return out;
}

namespace detail {
inline constexpr double kArgminRelTol = 1e-9;

template <class CostFn>
std::pair<double, std::vector<Perm>> brute_min_single(int n, CostFn&& cost) {
    Perm p = perm_identity(n);
    double best = cost(p);
    do {
        best = std::min(best, cost(p));
    } while (std::next_permutation(p.begin(), p.end()));
    const double cut = best + kArgminRelTol * (1.0 + std::abs(best));
    std::vector<Perm> argmin;
    p = perm_identity(n);
    do {
        if (cost(p) <= cut) argmin.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return {best, std::move(argmin)};
}
}  // namespace detail

inline std::pair<double, std::vector<Perm>> brute_min(const HatCost& c) {
    c.validate();
    if (c.n() > 8) throw std::invalid_argument("brute_min: n over cap");
    return detail::brute_min_single(c.n(), [&](const Perm& p) { return c.cost(p); });
}

inline std::pair<double, std::vector<Perm>> brute_min(const TildeCost& c) {
    c.validate();
    if (c.n() > 8) throw std::invalid_argument("brute_min: n over cap");
    return detail::brute_min_single(c.n(), [&](const Perm& p) { return c.cost(p); });
}

inline std::pair<double, std::vector<PermPair>> brute_min(const BarCost& c) {
    c.validate();
    if (c.n() > 5) throw std::invalid_argument("brute_min: n over cap");
    double best = c.cost(perm_identity(c.n()), perm_identity(c.n()));
    Perm pi = perm_identity(c.n());
    do {
        Perm pj = perm_identity(c.n());
        do {
            best = std::min(best, c.cost(pi, pj));
        } while (std::next_permutation(pj.begin(), pj.end()));
    } while (std::next_permutation(pi.begin(), pi.end()));
    const double cut = best + detail::kArgminRelTol * (1.0 + std::abs(best));
    std::vector<PermPair> argmin;
    pi = perm_identity(c.n());
    do {
        Perm pj = perm_identity(c.n());
        do {
            if (c.cost(pi, pj) <= cut) argmin.push_back({pi, pj});
        } while (std::next_permutation(pj.begin(), pj.end()));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {best, std::move(argmin)};
}

// ---- switch operations on zigzag pairs ----
//
// Reversing the sub-path strictly between the y-contacts y_{k_{l-1}} and
// y_{k_m} transforms (H, K) -> (S_(l,m) H, S_(l,m-1) K) and changes the cost
// by -2 (y_{k_m} - y_{k_{l-1}}) (x_{h_l} - x_{h_m}); the convention k_0
// addresses the y0 endpoint. The mirrored reversal between the x-contacts
// x_{h_l} and x_{h_{m+1}} (h_{n+1} addressing x0) gives
// (H, K) -> (S_(l+1,m) H, S_(l,m) K) with cost change
// -2 (y_{k_m} - y_{k_l}) (x_{h_l} - x_{h_{m+1}}).

inline PermPair switch_between_y(const PermPair& hk, int l, int m) {
    if (l < 1 || m < l || m > int(hk.I.size()))
        throw std::invalid_argument("switch_between_y: indices out of range");
    PermPair out = hk;
    out.I = switch_segment(hk.I, l, m);
    if (m - 1 >= l) out.J = switch_segment(hk.J, l, m - 1);
    return out;
}

inline PermPair switch_between_x(const PermPair& hk, int l, int m) {
    if (l < 1 || m < l || m > int(hk.I.size()))
        throw std::invalid_argument("switch_between_x: indices out of range");
    PermPair out = hk;
    if (m >= l + 1) out.I = switch_segment(hk.I, l + 1, m);
    out.J = switch_segment(hk.J, l, m);
    return out;
}

namespace detail {
inline double bar_x(const BarCost& c, const Perm& h, int pos1based) {
    return pos1based == c.n() + 1 ? c.x0 : c.xs[std::size_t(h[std::size_t(pos1based - 1)])];
}
inline double bar_y(const BarCost& c, const Perm& k, int pos1based) {
    return pos1based == 0 ? c.y0 : c.ys[std::size_t(k[std::size_t(pos1based - 1)])];
}
}  // namespace detail

// Hypotheses of the four switch lemmas; each guarantees the corresponding
// reversal does not increase the zigzag cost.
inline bool switch_hyp1(const BarCost& c, const PermPair& hk, int l, int m) {
    return detail::bar_x(c, hk.I, m) <= detail::bar_x(c, hk.I, l) &&
           detail::bar_y(c, hk.J, l - 1) <= detail::bar_y(c, hk.J, m);
}
inline bool switch_hyp2(const BarCost& c, const PermPair& hk, int l, int m) {
    return detail::bar_x(c, hk.I, l) <= detail::bar_x(c, hk.I, m) &&
           detail::bar_y(c, hk.J, m) <= detail::bar_y(c, hk.J, l - 1);
}
inline bool switch_hyp3(const BarCost& c, const PermPair& hk, int l, int m) {
    return detail::bar_y(c, hk.J, m) <= detail::bar_y(c, hk.J, l) &&
           detail::bar_x(c, hk.I, l) <= detail::bar_x(c, hk.I, m + 1);
}
inline bool switch_hyp4(const BarCost& c, const PermPair& hk, int l, int m) {
    return detail::bar_y(c, hk.J, l) <= detail::bar_y(c, hk.J, m) &&
           detail::bar_x(c, hk.I, m + 1) <= detail::bar_x(c, hk.I, l);
}

// Strict-lemma hypotheses: a permutation satisfying one cannot minimize.
// For the path cost, indices 0 and n+1 address the endpoints e0, e_last.
inline bool hat_strict_hypothesis(const HatCost& c, const Perm& p) {
    auto val = [&](int pos1based) {
        if (pos1based == 0) return c.e0;
        if (pos1based == c.n() + 1) return c.e_last;
        return c.xs[std::size_t(p[std::size_t(pos1based - 1)])];
    };
    for (int l = 1; l <= c.n(); ++l)
        for (int k = l + 1; k <= c.n(); ++k)
            if (val(l) > val(k) && val(l - 1) < val(k + 1)) return true;
    return false;
}

inline bool tilde_strict_hypothesis(const TildeCost& c, const Perm& p) {
    // a discordant pair: x_k > x_l while the paired y values are reversed
    for (int k = 0; k < c.n(); ++k)
        for (int l = 0; l < c.n(); ++l)
            if (c.xs[std::size_t(k)] > c.xs[std::size_t(l)] &&
                c.ys[std::size_t(p[std::size_t(l)])] > c.ys[std::size_t(p[std::size_t(k)])])
                return true;
    return false;
}

}  // namespace fk
