#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fk/spectral.hpp"

using namespace fk;

namespace {

Subgraph make(std::initializer_list<Cell> cells) {
    return Subgraph(std::vector<Cell>(cells));
}

Subgraph square(int k) {
    std::vector<Cell> cells;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) cells.push_back({x, y});
    return Subgraph(cells);
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("assemble matches the worked operators") {
    Subgraph single = make({{0, 0}});
    CHECK(assemble(single).dense()(0, 0) == 4.0);

    Eigen::MatrixXd domino = assemble(make({{0, 0}, {1, 0}})).dense();
    CHECK(domino(0, 0) == 4.0);
    CHECK(domino(0, 1) == -1.0);
    CHECK(domino(1, 0) == -1.0);
    CHECK(domino(1, 1) == 4.0);

    // applying L_D to all-ones yields the per-vertex boundary edge count
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    DirichletOperator op = assemble(plus);
    std::vector<double> ones(5, 1.0), out(5);
    op.apply(ones, out);
    for (int i = 0; i < 5; ++i) CHECK(out[std::size_t(i)] == op.boundary_edges(i));
}

TEST_CASE("P_D step operator") {
    StepOperator pd = assemble_pd(make({{0, 0}, {1, 0}}));
    Eigen::MatrixXd m = pd.dense();
    CHECK(m(0, 0) == 0.0);
    CHECK(m(0, 1) == 0.25);
    CHECK(assemble_pd(make({{0, 0}})).dense()(0, 0) == 0.0);

    // row sums fall short of 1 by boundary_edges/4
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    Eigen::MatrixXd mp = assemble_pd(plus).dense();
    DirichletOperator op = assemble(plus);
    for (int i = 0; i < 5; ++i)
        CHECK(mp.row(i).sum() == Catch::Approx(1.0 - op.boundary_edges(i) / 4.0));
}

TEST_CASE("worked eigenvalues") {
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(lambda_d(plus).lambda_d == Catch::Approx(2.0).margin(1e-9));
    CHECK(lambda_d(square(2)).lambda_d == Catch::Approx(2.0).margin(1e-9));

    SpectralReport dom = lambda_d(make({{0, 0}, {1, 0}}));
    CHECK(dom.lambda_d == Catch::Approx(3.0).margin(1e-9));

    Subgraph pent = make({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(lambda_d(pent).lambda_d < 2.0 - 1e-6);

    for (int k : {3, 5, 8})
        CHECK(lambda_d(square(k)).lambda_d ==
              Catch::Approx(4.0 - 4.0 * std::cos(kPi / (k + 1))).margin(1e-9));
}

TEST_CASE("dense spectrum oracle") {
    auto dom = dense_spectrum(make({{0, 0}, {1, 0}}));
    REQUIRE(dom.size() == 2);
    CHECK(dom[0] == Catch::Approx(3.0).margin(1e-12));
    CHECK(dom[1] == Catch::Approx(5.0).margin(1e-12));

    auto single = dense_spectrum(make({{0, 0}}));
    CHECK(single[0] == Catch::Approx(4.0).margin(1e-12));

    auto path3 = dense_spectrum(make({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(path3[0] == Catch::Approx(4.0 - std::sqrt(2.0)).margin(1e-12));
    CHECK(path3[1] == Catch::Approx(4.0).margin(1e-12));
    CHECK(path3[2] == Catch::Approx(4.0 + std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("eigenfunction is positive, normalized, consistent") {
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    SpectralReport rep = lambda_d(plus);
    double norm2 = 0.0;
    for (double v : rep.eigenfunction) {
        CHECK(v > 0.0);
        norm2 += v * v;
    }
    CHECK(norm2 == Catch::Approx(1.0).margin(1e-12));
    CHECK(rayleigh(plus, rep.eigenfunction) ==
          Catch::Approx(rep.lambda_d).margin(1e-8));
    CHECK(rep.residual <= kDefaultTol);
}

TEST_CASE("rayleigh examples and lower-bound property") {
    for (int k : {2, 3, 4}) {
        Subgraph s = square(k);
        std::vector<double> ones(std::size_t(k) * std::size_t(k), 1.0);
        CHECK(rayleigh(s, ones) == Catch::Approx(4.0 / k).margin(1e-12));
    }

    Subgraph s3 = square(3);
    std::vector<double> ind(9, 0.0);
    ind[std::size_t(s3.index_of(Cell{1, 1}))] = 1.0;
    CHECK(rayleigh(s3, ind) == Catch::Approx(4.0).margin(1e-12));

    CHECK_THROWS_AS(rayleigh(s3, std::vector<double>(9, 0.0)),
                    std::invalid_argument);

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uni(0.1, 2.0);
    Subgraph pent = make({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
    double lam = lambda_d(pent).lambda_d;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> f(5);
        for (double& v : f) v = uni(rng);
        CHECK(rayleigh(pent, f) >= lam - 1e-9);
    }
}

TEST_CASE("integration by parts identity") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Cell> cells;
        int target = 2 + int(rng() % 29);
        while (int(cells.size()) < target) cells.push_back({coord(rng), coord(rng)});
        Subgraph g(cells);
        DirichletOperator op = assemble(g);
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<double> f(static_cast<std::size_t>(g.size())), lf(static_cast<std::size_t>(g.size()));
            for (double& v : f) v = uni(rng);
            op.apply(f, lf);
            double lhs = std::inner_product(f.begin(), f.end(), lf.begin(), 0.0);
            double num = 0.0;
            for (int i = 0; i < g.size(); ++i) {
                num += op.boundary_edges(i) * f[std::size_t(i)] * f[std::size_t(i)];
                for (int j : op.neighbors[std::size_t(i)])
                    if (j > i) {
                        double d = f[std::size_t(i)] - f[std::size_t(j)];
                        num += d * d;
                    }
            }
            CHECK(lhs == Catch::Approx(num).margin(1e-10));
        }
    }
}

TEST_CASE("boundary identity") {
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    SpectralReport rp = lambda_d(plus);
    CHECK(boundary_identity_residual(plus, rp) <= 10 * (rp.residual + 1e-12) * 5);

    Subgraph sq = square(2);
    SpectralReport rs = lambda_d(sq);
    CHECK(boundary_identity_residual(sq, rs) < 1e-9);

    Subgraph dom = make({{0, 0}, {1, 0}});
    SpectralReport rd = lambda_d(dom);
    CHECK(boundary_identity_residual(dom, rd) < 1e-9);
}

TEST_CASE("automorphism symmetry of eigenfunctions") {
    Subgraph plus = make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK(automorphism_symmetry_residual(plus, lambda_d(plus)) < 1e-8);

    Subgraph sq = square(2);
    SpectralReport rs = lambda_d(sq);
    CHECK(automorphism_symmetry_residual(sq, rs) < 1e-8);
    // constant eigenfunction on the 2x2 square
    for (double v : rs.eigenfunction) CHECK(v == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("monotonicity under vertex addition") {
    std::vector<Subgraph> shapes = {
        make({{0, 0}}), make({{0, 0}, {1, 0}}),
        make({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        make({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}})};
    for (const Subgraph& g : shapes) {
        double lam = lambda_d(g).lambda_d;
        for (const Cell& b : boundary(g)) {
            std::vector<Cell> cells = g.cells();
            cells.push_back(b);
            CHECK(lambda_d(Subgraph(cells)).lambda_d < lam - 1e-12);
        }
    }
}

TEST_CASE("disconnected input returns the block minimum") {
    Subgraph two = make({{0, 0}, {5, 5}, {6, 5}});  // single cell + domino
    SpectralReport rep = lambda_d(two);
    CHECK(rep.lambda_d == Catch::Approx(3.0).margin(1e-9));
    // eigenfunction lives on the domino, vanishes on the singleton
    CHECK(rep.value_at(two, Cell{0, 0}) == 0.0);
    CHECK(rep.value_at(two, Cell{5, 5}) > 0.0);
}

TEST_CASE("spectrum invariant under D4") {
    Subgraph pent = make({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
    auto base = dense_spectrum(pent);
    for (int op = 1; op < 8; ++op) {
        auto s = dense_spectrum(transform(pent, D4Element{op, 3, -1}));
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(s[i] == Catch::Approx(base[i]).margin(1e-9));
    }
}

TEST_CASE("iterative matches dense on random shapes") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int t = 0; t < 100; ++t) {
        std::vector<Cell> cells;
        int target = 1 + int(rng() % 25);
        while (int(cells.size()) < target) cells.push_back({coord(rng), coord(rng)});
        Subgraph g(cells);
        CHECK(lambda_d(g).lambda_d ==
              Catch::Approx(dense_spectrum(g)[0]).margin(1e-8));
        double lam = lambda_d(g).lambda_d;
        CHECK(lam > 0.0);
        CHECK(lam <= 4.0 + 1e-12);
    }
}
