#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fk/continuum.hpp"

using namespace fk;

namespace {

Subgraph square(int k) {
    std::vector<Cell> cells;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) cells.push_back({x, y});
    return Subgraph(cells);
}

// the tie-break-reversed greedy disk, an independent construction
Subgraph discrete_disk_reversed(int n) {
    const int r = int(std::ceil(std::sqrt(double(n) / kPi))) + 2;
    struct Entry {
        long norm2;
        int x, y;
    };
    std::vector<Entry> cand;
    for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y) cand.push_back({long(x) * x + long(y) * y, x, y});
    std::sort(cand.begin(), cand.end(), [](const Entry& a, const Entry& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        if (a.x != b.x) return a.x > b.x;  // reversed ties
        return a.y > b.y;
    });
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
        cells.push_back({cand[std::size_t(i)].x, cand[std::size_t(i)].y});
    return Subgraph(std::move(cells));
}

}  // namespace

TEST_CASE("discrete disk construction") {
    CHECK(discrete_disk(1) == Subgraph({{0, 0}}));
    CHECK(discrete_disk(2) == Subgraph({{0, 0}, {-1, 0}}));
    CHECK(discrete_disk(5) ==
          Subgraph({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(discrete_disk(100).size() == 100);
    CHECK(is_connected(discrete_disk(57)));
    CHECK_THROWS_AS(discrete_disk(0), std::invalid_argument);
}

TEST_CASE("n lambda_D(D_n) is insensitive to the greedy tie order") {
    for (int n : {2, 10, 21}) {
        double a = lambda_d(discrete_disk(n)).lambda_d;
        double b = lambda_d(discrete_disk_reversed(n)).lambda_d;
        CHECK(a == Catch::Approx(b).margin(1e-9));
    }
}

TEST_CASE("gauss count brackets") {
    GaussCount g1 = gauss_count(1);
    CHECK(g1.count == 1);
    CHECK(g1.lower == Catch::Approx(1.0 - std::sqrt(kPi) + kPi / 4).margin(1e-12));
    CHECK(g1.within_bounds());

    GaussCount g100 = gauss_count(100);
    CHECK(g100.within_bounds());
    CHECK(g100.lower == Catch::Approx(100 - std::sqrt(100 * kPi) + kPi / 4).margin(1e-9));

    for (long n = 1; n <= 2000; ++n) CHECK(gauss_count(n).within_bounds());
}

TEST_CASE("gauss sweep agrees with per-n counting") {
    auto counts = gauss_counts_upto(500);
    for (long n : {1L, 7L, 42L, 100L, 333L, 500L})
        CHECK(counts[std::size_t(n)] == gauss_count(n).count);
}

TEST_CASE("sandwich holds for small squares") {
    for (int k : {2, 3, 4}) {
        SandwichReport rep = sandwich_check(square(k), 8);
        INFO("k = " << k);
        CHECK(rep.conclusive_ok());
        CHECK(rep.upper.status != BoundStatus::violated);
        CHECK(rep.lower.status != BoundStatus::violated);
    }
}

TEST_CASE("sandwich upper bound is out of domain for the single cell") {
    SandwichReport rep = sandwich_check(Subgraph({{0, 0}}), 8);
    CHECK(rep.upper.status == BoundStatus::out_of_domain);
}

TEST_CASE("sandwich holds for a small discrete disk") {
    SandwichReport rep = sandwich_check(discrete_disk(25), 8);
    CHECK(rep.conclusive_ok());
    // and the discrete value stays below the upper right-hand side
    CHECK(rep.lambda_discrete <= rep.upper.rhs_hi);
}

TEST_CASE("disk convergence direction") {
    auto reports = disk_convergence({25, 100, 400}, 0, 400);
    REQUIRE(reports.size() == 3);
    double prev = 1e9;
    for (const DiskReport& r : reports) {
        double dev = std::abs(r.lambda_discrete - kDiskLambda);
        CHECK(dev < prev);
        prev = dev;
        CHECK(std::abs(r.centroid_x) < 0.2);
        CHECK(std::abs(r.centroid_y) < 0.2);
    }
    // n = 1 is far from the target, as expected
    auto tiny = disk_convergence({1}, 0, 64);
    CHECK(std::abs(tiny[0].lambda_discrete - kDiskLambda) > 10.0);
}

TEST_CASE("fd on a discrete disk mask approaches the Bessel value") {
    Subgraph d = discrete_disk(400);
    double fd = fd_lambda(build_mask(d, 8, 0.0));
    CHECK(std::abs(fd - kDiskLambda) < 1.0);
}

TEST_CASE("symdiff against the disk") {
    // discrete disks converge toward the disk shape
    double s25 = symdiff_vs_disk(discrete_disk(25), 400);
    double s100 = symdiff_vs_disk(discrete_disk(100), 400);
    double s400 = symdiff_vs_disk(discrete_disk(400), 400);
    CHECK(s100 < s25);
    CHECK(s400 < s100);
    CHECK(s400 < 0.2);

    // a long path is nearly disjoint from the disk: symdiff near 2
    std::vector<Cell> path;
    for (int x = 0; x < 100; ++x) path.push_back({x, 0});
    double sp = symdiff_vs_disk(Subgraph(path), 400);
    CHECK(sp > 1.6);
    std::vector<Cell> longer;
    for (int x = 0; x < 400; ++x) longer.push_back({x, 0});
    CHECK(symdiff_vs_disk(Subgraph(longer), 400) > sp);

    // center refinement can only improve the measure
    CHECK(symdiff_vs_disk(discrete_disk(25), 200, true) <=
          symdiff_vs_disk(discrete_disk(25), 200, false) + 1e-12);
}

TEST_CASE("dilation symdiff decays like n^{-1/2} on discrete disks") {
    double d25 = dilation_symdiff(discrete_disk(25), 8);
    double d100 = dilation_symdiff(discrete_disk(100), 8);
    double d400 = dilation_symdiff(discrete_disk(400), 8);
    CHECK(d100 < d25);
    CHECK(d400 < d100);
    // log-log slope against n within a factor of two of -1/2
    double slope = std::log(d400 / d25) / std::log(400.0 / 25.0);
    CHECK(slope < -0.25);
    CHECK(slope > -1.0);
}

TEST_CASE("dilation of epsilon zero is empty") {
    Subgraph plus({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    RefinedMask a = build_mask(plus, 8, 0.0, 17);
    CHECK(mask_diff_area(a, a) == 0.0);
}
