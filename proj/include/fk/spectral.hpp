#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fk/subgraph.hpp"

namespace fk {

inline constexpr int kAmbientDegree = 4;   // Z^2 is 4-regular
inline constexpr int kDenseCap = 4096;
inline constexpr long kPowerIterationCap = 1'000'000;
inline constexpr double kDefaultTol = 1e-10;

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double best_lambda, double residual,
                long iterations)
        : std::runtime_error(what),
          best_lambda(best_lambda),
          residual(residual),
          iterations(iterations) {}
    double best_lambda;
    double residual;
    long iterations;
};

// L_D = 4I - A of an induced subgraph, stored as per-vertex neighbor indices
// over the (y, x)-sorted cell order.
struct DirichletOperator {
    std::vector<Cell> order;                    // sorted cells of the subgraph
    std::vector<std::array<int, 4>> neighbors;  // index or -1
    std::vector<int> degree;                    // in-graph degree

    int size() const { return int(order.size()); }

    // boundary-edge count of vertex i: number of Z^2 neighbors outside
    int boundary_edges(int i) const { return kAmbientDegree - degree[std::size_t(i)]; }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            double s = kAmbientDegree * x[std::size_t(i)];
            for (int j : neighbors[std::size_t(i)])
                if (j >= 0) s -= x[std::size_t(j)];
            y[std::size_t(i)] = s;
        }
    }

    Eigen::MatrixXd dense() const {
        const int n = size();
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = kAmbientDegree;
            for (int j : neighbors[std::size_t(i)])
                if (j >= 0) m(i, j) = -1.0;
        }
        return m;
    }
};

inline DirichletOperator assemble(const Subgraph& g) {
    DirichletOperator op;
    op.order = g.cells();
    op.neighbors.resize(op.order.size());
    op.degree.assign(op.order.size(), 0);
    for (int i = 0; i < op.size(); ++i) {
        int k = 0;
        for (const Cell& d : kNeighborSteps) {
            int j = g.index_of(shifted(op.order[std::size_t(i)], d));
            op.neighbors[std::size_t(i)][std::size_t(k++)] = j;
            if (j >= 0) ++op.degree[std::size_t(i)];
        }
    }
    return op;
}

// Substochastic step matrix P_D = I - L_D/4 of the absorbing walk.
struct StepOperator {
    DirichletOperator base;

    int size() const { return base.size(); }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j : base.neighbors[std::size_t(i)])
                if (j >= 0) s += x[std::size_t(j)];
            y[std::size_t(i)] = 0.25 * s;
        }
    }

    Eigen::MatrixXd dense() const {
        const int n = size();
        return Eigen::MatrixXd::Identity(n, n) - base.dense() / 4.0;
    }
};

inline StepOperator assemble_pd(const Subgraph& g) { return StepOperator{assemble(g)}; }

enum class SpectralMethod { power, dense };

struct SpectralReport {
    double lambda_d = 0.0;
    std::vector<Cell> cells;           // sorted by (y, x)
    std::vector<double> eigenfunction; // aligned with cells, l2 norm 1
    double residual = 0.0;
    long iterations = 0;
    SpectralMethod method = SpectralMethod::power;

    double value_at(const Subgraph& g, const Cell& c) const {
        int i = g.index_of(c);
        return i < 0 ? 0.0 : eigenfunction[std::size_t(i)];
    }
};

namespace detail {

struct ComponentEig {
    double lambda = 0.0;
    std::vector<double> vec;  // over component indices, l2 norm 1
    double residual = 0.0;
    long iterations = 0;
    SpectralMethod method = SpectralMethod::power;
};

// Dense smallest eigenpair of L_D restricted to one component.
inline ComponentEig dense_component(const DirichletOperator& op,
                                    const std::vector<int>& comp) {
    const int n = int(comp.size());
    std::vector<int> where(op.order.size(), -1);
    for (int i = 0; i < n; ++i) where[std::size_t(comp[std::size_t(i)])] = i;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = kAmbientDegree;
        for (int j : op.neighbors[std::size_t(comp[std::size_t(i)])])
            if (j >= 0) m(i, where[std::size_t(j)]) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    ComponentEig out;
    out.lambda = es.eigenvalues()(0);
    Eigen::VectorXd v = es.eigenvectors().col(0);
    out.residual = (m * v - out.lambda * v).norm();
    out.vec.assign(v.data(), v.data() + n);
    out.method = SpectralMethod::dense;
    return out;
}

// Power iteration on M = I - L_D/8 restricted to one component. M is
// nonnegative with positive diagonal, so it is primitive on a connected
// component and the iteration converges from the all-ones start; the top
// eigenvalue mu gives lambda_D = 8(1 - mu).
inline ComponentEig power_component(const DirichletOperator& op,
                                    const std::vector<int>& comp, double tol) {
    const int n = int(comp.size());
    const std::size_t un = comp.size();
    std::vector<int> where(op.order.size(), -1);
    for (int i = 0; i < n; ++i) where[std::size_t(comp[std::size_t(i)])] = i;

    std::vector<std::array<int, 4>> nbr(un);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 4; ++k) {
            int j = op.neighbors[std::size_t(comp[std::size_t(i)])][std::size_t(k)];
            nbr[std::size_t(i)][std::size_t(k)] = j >= 0 ? where[std::size_t(j)] : -1;
        }

    std::vector<double> v(un, 1.0 / std::sqrt(double(n)));
    std::vector<double> w(un);
    const double tol_m = tol / 8.0;
    double mu = 0.0, res_m = std::numeric_limits<double>::infinity();
    long it = 0;
    for (; it < kPowerIterationCap; ++it) {
        // w = v - (L_D v)/8
        for (int i = 0; i < n; ++i) {
            double s = kAmbientDegree * v[std::size_t(i)];
            for (int j : nbr[std::size_t(i)])
                if (j >= 0) s -= v[std::size_t(j)];
            w[std::size_t(i)] = v[std::size_t(i)] - s / 8.0;
        }
        mu = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
        double r2 = 0.0, n2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = w[std::size_t(i)] - mu * v[std::size_t(i)];
            r2 += d * d;
            n2 += w[std::size_t(i)] * w[std::size_t(i)];
        }
        res_m = std::sqrt(r2);
        const double inv = 1.0 / std::sqrt(n2);
        for (double& x : w) x *= inv;
        v.swap(w);
        if (res_m <= tol_m) {
            ++it;
            break;
        }
    }
    ComponentEig out;
    out.lambda = 8.0 * (1.0 - mu);
    out.residual = 8.0 * res_m;
    out.iterations = it;
    out.vec = std::move(v);
    out.method = SpectralMethod::power;
    if (res_m > tol_m) {
        if (n <= kDenseCap) {
            ComponentEig d = dense_component(op, comp);
            d.iterations = it;
            return d;
        }
        throw SolverError("eigenvalue iteration did not converge", out.lambda,
                          out.residual, it);
    }
    return out;
}

}  // namespace detail

// Smallest Dirichlet eigenvalue with its positive normalized eigenfunction.
// Disconnected inputs decompose into components; the report carries the
// block minimum, with the eigenfunction supported on a minimizing component.
inline SpectralReport lambda_d(const Subgraph& g, double tol = kDefaultTol) {
    DirichletOperator op = assemble(g);
    std::vector<std::vector<int>> comps = components(g);

    detail::ComponentEig best;
    std::size_t best_idx = 0;
    long total_it = 0;
    bool have = false;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        detail::ComponentEig e = detail::power_component(op, comps[ci], tol);
        total_it += e.iterations;
        if (!have || e.lambda < best.lambda) {
            best = std::move(e);
            best_idx = ci;
            have = true;
        }
    }

    SpectralReport rep;
    rep.lambda_d = best.lambda;
    rep.cells = op.order;
    rep.eigenfunction.assign(op.order.size(), 0.0);
    const std::vector<int>& comp = comps[best_idx];
    // sign fix: positive entry at the (y, x)-smallest cell of the component
    double sign = best.vec[0] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < comp.size(); ++i)
        rep.eigenfunction[std::size_t(comp[i])] = sign * best.vec[i];
    rep.residual = best.residual;
    rep.iterations = total_it;
    rep.method = best.method;
    return rep;
}

// All |g| eigenvalues of L_D, ascending. Oracle route, dense.
inline std::vector<double> dense_spectrum(const Subgraph& g) {
    if (g.size() > kDenseCap)
        throw std::invalid_argument("dense_spectrum: size cap exceeded");
    DirichletOperator op = assemble(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense(),
                                                      Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + g.size());
}

inline double lambda_d_dense(const Subgraph& g) {
    if (g.size() > kDenseCap)
        throw std::invalid_argument("dense_spectrum: size cap exceeded");
    DirichletOperator op = assemble(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense(),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// Rayleigh quotient over the closure: in-graph edge differences plus one
// f(x)^2 term per edge from x to the boundary (f is 0 there).
inline double rayleigh(const Subgraph& g, const std::vector<double>& f) {
    if (f.size() != std::size_t(g.size()))
        throw std::invalid_argument("rayleigh: value count mismatch");
    DirichletOperator op = assemble(g);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < op.size(); ++i) {
        const double fi = f[std::size_t(i)];
        den += fi * fi;
        num += op.boundary_edges(i) * fi * fi;
        for (int j : op.neighbors[std::size_t(i)])
            if (j > i) {
                double d = fi - f[std::size_t(j)];
                num += d * d;
            }
    }
    if (den == 0.0) throw std::invalid_argument("rayleigh: zero function");
    return num / den;
}

// |sum_x boundary_edges(x) f(x) - lambda ||f||_1| for a computed eigenpair.
inline double boundary_identity_residual(const Subgraph& g,
                                         const SpectralReport& rep) {
    DirichletOperator op = assemble(g);
    double lhs = 0.0, l1 = 0.0;
    for (int i = 0; i < op.size(); ++i) {
        lhs += op.boundary_edges(i) * rep.eigenfunction[std::size_t(i)];
        l1 += std::abs(rep.eigenfunction[std::size_t(i)]);
    }
    return std::abs(lhs - rep.lambda_d * l1);
}

// max over lattice automorphisms chi and cells c of |f(c) - f(chi(c))|
inline double automorphism_symmetry_residual(const Subgraph& g,
                                             const SpectralReport& rep) {
    double worst = 0.0;
    for (const D4Element& chi : automorphisms(g))
        for (int i = 0; i < g.size(); ++i) {
            double d = std::abs(rep.eigenfunction[std::size_t(i)] -
                                rep.value_at(g, chi.apply(g.cells()[std::size_t(i)])));
            worst = std::max(worst, d);
        }
    return worst;
}

}  // namespace fk
