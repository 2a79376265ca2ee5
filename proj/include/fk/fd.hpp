#pragma once

#include <Eigen/Dense>

#include "fk/mask.hpp"
#include "fk/spectral.hpp"

namespace fk {

inline constexpr int kFdDenseCap = 512;
inline constexpr long kLobpcgCap = 200'000;

struct FdSolveInfo {
    double lambda = 0.0;    // in G*-units, i.e. s_min / delta^2
    double residual = 0.0;  // ||S v - s v||_2 of the unscaled stencil
    long iterations = 0;
    long unknowns = 0;
};

namespace detail {

// Five-point stencil over the inside subcell centers with the Dirichlet
// condition imposed on the faces: a missing neighbor reflects as -u_c, so
// the diagonal is 4 + (#missing). Eigenvalues of S sit in (0, 8].
struct FdStencil {
    std::vector<int32_t> nbr;   // 4 per unknown, -1 when absent
    std::vector<double> diag;
    long n = 0;

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        for (long i = 0; i < n; ++i) {
            double s = diag[std::size_t(i)] * x[std::size_t(i)];
            const int32_t* nb = &nbr[std::size_t(4 * i)];
            for (int k = 0; k < 4; ++k)
                if (nb[k] >= 0) s -= x[std::size_t(nb[k])];
            y[std::size_t(i)] = s;
        }
    }
};

inline FdStencil build_stencil(const RefinedMask& mask) {
    std::vector<int32_t> index(mask.inside.size(), -1);
    long n = 0;
    for (std::size_t k = 0; k < mask.inside.size(); ++k)
        if (mask.inside[k]) index[k] = int32_t(n++);
    FdStencil st;
    st.n = n;
    st.nbr.assign(std::size_t(4 * n), -1);
    st.diag.assign(std::size_t(n), 0.0);
    const int w = mask.width, h = mask.height;
    auto idx = [&](int i, int j) -> int32_t {
        if (i < 0 || j < 0 || i >= w || j >= h) return -1;
        return index[std::size_t(j) * std::size_t(w) + std::size_t(i)];
    };
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            int32_t me = idx(i, j);
            if (me < 0) continue;
            const int32_t around[4] = {idx(i + 1, j), idx(i - 1, j), idx(i, j + 1),
                                       idx(i, j - 1)};
            int missing = 0;
            for (int k = 0; k < 4; ++k) {
                st.nbr[std::size_t(4 * me + k)] = around[k];
                if (around[k] < 0) ++missing;
            }
            st.diag[std::size_t(me)] = 4.0 + missing;
        }
    return st;
}

inline FdSolveInfo dense_smallest(const FdStencil& st) {
    const long n = st.n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (long i = 0; i < n; ++i) {
        m(i, i) = st.diag[std::size_t(i)];
        for (int k = 0; k < 4; ++k) {
            int32_t j = st.nbr[std::size_t(4 * i + k)];
            if (j >= 0) m(i, j) = -1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    FdSolveInfo info;
    info.lambda = es.eigenvalues()(0);
    Eigen::VectorXd v = es.eigenvectors().col(0);
    info.residual = (m * v - info.lambda * v).norm();
    info.unknowns = n;
    return info;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline void scale(std::vector<double>& a, double c) {
    for (double& v : a) v *= c;
}

// y += c * x
inline void axpy(std::vector<double>& y, double c, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

// Single-vector LOBPCG: Rayleigh-Ritz on span{x, residual, previous step}.
// Unpreconditioned; the O(sqrt(kappa)) step count is what makes refined
// masks tractable where plain power iteration stalls on an O(delta^2) gap.
inline FdSolveInfo lobpcg_smallest(const FdStencil& st, double tol = 1e-10) {
    const std::size_t n = std::size_t(st.n);
    std::vector<double> x(n, 1.0 / std::sqrt(double(st.n)));
    std::vector<double> sx(n), sp(n), p;
    std::vector<double> r(n), sr(n);

    FdSolveInfo info;
    info.unknowns = st.n;
    st.apply(x, sx);
    double rho = dot(x, sx);

    for (long it = 0; it < kLobpcgCap; ++it) {
        for (std::size_t i = 0; i < n; ++i) r[i] = sx[i] - rho * x[i];
        double rn = norm(r);
        info.lambda = rho;
        info.residual = rn;
        info.iterations = it;
        if (rn <= tol) return info;

        // orthonormal basis [x, r_hat, p_hat]
        scale(r, 1.0 / rn);
        axpy(r, -dot(r, x), x);
        double rn2 = norm(r);
        if (rn2 > 1e-10) scale(r, 1.0 / rn2);
        st.apply(r, sr);

        bool use_p = !p.empty();
        if (use_p) {
            axpy(p, -dot(p, x), x);
            axpy(p, -dot(p, r), r);
            double pn = norm(p);
            if (pn > 1e-8) {
                scale(p, 1.0 / pn);
                st.apply(p, sp);
            } else {
                use_p = false;
            }
        }

        const int dim = use_p ? 3 : 2;
        Eigen::MatrixXd a(dim, dim);
        a(0, 0) = dot(x, sx);
        a(0, 1) = a(1, 0) = dot(x, sr);
        a(1, 1) = dot(r, sr);
        if (use_p) {
            a(0, 2) = a(2, 0) = dot(x, sp);
            a(1, 2) = a(2, 1) = dot(r, sp);
            a(2, 2) = dot(p, sp);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        Eigen::VectorXd y = es.eigenvectors().col(0);

        // next iterate and conjugate direction
        std::vector<double> xn(n, 0.0), pn_vec(n, 0.0);
        axpy(xn, y(0), x);
        axpy(xn, y(1), r);
        axpy(pn_vec, y(1), r);
        if (use_p) {
            axpy(xn, y(2), p);
            axpy(pn_vec, y(2), p);
        }
        double xnn = norm(xn);
        scale(xn, 1.0 / xnn);
        x.swap(xn);
        p.swap(pn_vec);
        st.apply(x, sx);
        rho = dot(x, sx);
    }
    throw SolverError("fd eigensolver did not converge", rho, info.residual,
                      kLobpcgCap);
}

}  // namespace detail

inline FdSolveInfo fd_solve(const RefinedMask& mask, double tol = 1e-10) {
    detail::FdStencil st = detail::build_stencil(mask);
    if (st.n == 0) throw std::invalid_argument("fd_solve: empty mask");
    FdSolveInfo info = st.n <= kFdDenseCap ? detail::dense_smallest(st)
                                           : detail::lobpcg_smallest(st, tol);
    const double d = mask.delta();
    info.lambda /= d * d;
    return info;
}

// Smallest eigenvalue of the five-point Dirichlet operator on the mask, in
// G*-units.
inline double fd_lambda(const RefinedMask& mask) { return fd_solve(mask).lambda; }

// Two-grid estimate with a second-order extrapolated value and an
// uncertainty that also covers first-order boundary error.
struct FdEstimate {
    double value = 0.0;
    double uncertainty = 0.0;
    double coarse = 0.0;
    double fine = 0.0;
};

inline FdEstimate fd_richardson(const Subgraph& g, int m, double epsilon = 0.0) {
    FdEstimate est;
    est.coarse = fd_lambda(build_mask(g, m, epsilon));
    est.fine = fd_lambda(build_mask(g, 2 * m, epsilon));
    est.value = (4.0 * est.fine - est.coarse) / 3.0;
    est.uncertainty = std::abs(est.fine - est.coarse);
    return est;
}

}  // namespace fk
