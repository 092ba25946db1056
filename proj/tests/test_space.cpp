#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ccx/errors.hpp"
#include "ccx/space.hpp"
#include "fixtures.hpp"

using namespace ccx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("inner-product coupling holds pairwise products") {
    Coupling c = make_inner_product_coupling({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0});
    CHECK(c.nx() == 3);
    CHECK(c.ny() == 3);
    CHECK(c.at(2, 2) == 4.0);
    CHECK(c.at(1, 2) == 2.0);
    CHECK(c.at(0, 1) == 0.0);
}

TEST_CASE("inner-product coupling: single-point grids give a 1x1 zero table") {
    Coupling c = make_inner_product_coupling({0.0}, {0.0});
    CHECK(c.nx() == 1);
    CHECK(c.ny() == 1);
    CHECK(c.at(0, 0) == 0.0);
}

TEST_CASE("inner-product coupling on a symmetric grid is symmetric") {
    Coupling c = make_inner_product_coupling({-1.0, 0.0, 1.0}, {-1.0, 0.0, 1.0});
    CHECK(c.at(0, 2) == -1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c.at(i, j) == c.at(j, i));
}

TEST_CASE("inner-product coupling rejects empty grids") {
    CHECK_THROWS_AS(make_inner_product_coupling({}, {0.0}), InvalidInput);
    CHECK_THROWS_AS(make_inner_product_coupling({0.0}, {}), InvalidInput);
}

TEST_CASE("negative half squared distance on the circle") {
    FiniteSpace circle = FiniteSpace::circle(8);
    Coupling c = make_neg_half_sqdist_coupling(circle);
    CHECK(c.at(0, 2) == -(kPi / 2) * (kPi / 2) / 2);
    for (int i = 0; i < 8; ++i) CHECK(c.at(i, i) == 0.0);
}

TEST_CASE("negative half squared distance on an interval grid") {
    FiniteSpace grid = FiniteSpace::from_coords({0.0, 0.5, 1.0});
    Coupling c = make_neg_half_sqdist_coupling(grid);
    CHECK(c.at(0, 2) == -0.5);
    CHECK(c.at(0, 1) == -0.125);
}

TEST_CASE("negative half squared distance needs a ground metric") {
    CHECK_THROWS_AS(make_neg_half_sqdist_coupling(FiniteSpace::points(4)), InvalidInput);
}

TEST_CASE("arclength coupling equals the geodesic distance") {
    FiniteSpace circle = FiniteSpace::circle(8);
    Coupling c = make_arclength_coupling(circle);
    CHECK(c.at(0, 2) == kPi / 2);  // quarter turn
    CHECK(c.at(0, 4) == kPi);      // antipodal
    for (int i = 0; i < 8; ++i) CHECK(c.at(i, i) == 0.0);
}

TEST_CASE("arclength coupling is restricted to circle discretizations") {
    CHECK_THROWS_AS(make_arclength_coupling(FiniteSpace::points(4)), InvalidInput);
    CHECK_THROWS_AS(make_arclength_coupling(FiniteSpace::interval_grid(0.0, 1.0, 5)),
                    InvalidInput);
}

TEST_CASE("pairwise-symmetrized cost evaluates the two-term sum") {
    SymmetrizedCoupling sc{make_inner_product_coupling({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0})};
    CHECK(eval_C(sc, UPoint{1, 2}, VPoint{2, 0}) == 2.0);
}

TEST_CASE("pairwise-symmetrized cost doubles on mirrored arguments") {
    SymmetrizedCoupling sc{make_inner_product_coupling({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0})};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(eval_C(sc, UPoint{x, y}, VPoint{y, x}) == 2.0 * sc.base.at(x, y));
}

TEST_CASE("pairwise-symmetrized cost is invariant under the coordinate swap") {
    ccxt::Rng rng(20260822);
    SymmetrizedCoupling sc{ccxt::random_coupling(rng, 5, 7)};
    for (int k = 0; k < 100; ++k) {
        UPoint u{rng.uniform_int(0, 4), rng.uniform_int(0, 6)};
        VPoint v{rng.uniform_int(0, 6), rng.uniform_int(0, 4)};
        // Both sides read the same two table entries, so equality is exact.
        CHECK(eval_C(sc, u, v) == eval_C(sc, swap_to_u(v), swap_to_v(u)));
    }
}

TEST_CASE("pairwise-symmetrized cost rejects out-of-range indices") {
    SymmetrizedCoupling sc{make_inner_product_coupling({0.0, 1.0}, {0.0, 1.0})};
    CHECK_THROWS_AS(eval_C(sc, UPoint{2, 0}, VPoint{0, 0}), InvalidInput);
    CHECK_THROWS_AS(eval_C(sc, UPoint{0, 0}, VPoint{0, -1}), InvalidInput);
}

TEST_CASE("coordinate swaps invert each other") {
    UPoint u{3, 5};
    UPoint u2 = swap_to_u(swap_to_v(u));
    CHECK(u2.x == u.x);
    CHECK(u2.y == u.y);
    VPoint v{4, 1};
    VPoint v2 = swap_to_v(swap_to_u(v));
    CHECK(v2.x == v.x);
    CHECK(v2.y == v.y);
}

TEST_CASE("circle metric satisfies the triangle inequality exhaustively") {
    for (int n : {5, 8, 64}) {
        FiniteSpace circle = FiniteSpace::circle(n);
        const Table& d = circle.metric();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    CHECK(d.at(i, k) <= d.at(i, j) + d.at(j, k) + 1e-12);
    }
}

TEST_CASE("squared distances change at most linearly with slope twice the diameter") {
    auto check_space = [](const FiniteSpace& sp) {
        const Table& d = sp.metric();
        const double bound_slope = 2.0 * sp.diameter();
        const int n = sp.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    double lhs = std::abs(d.at(x, y) * d.at(x, y) - d.at(z, y) * d.at(z, y));
                    CHECK(lhs <= bound_slope * d.at(x, z) + 1e-12);
                }
    };
    check_space(FiniteSpace::circle(16));
    check_space(FiniteSpace::interval_grid(0.0, 1.0, 9));
}

TEST_CASE("circle geometry: diameter, spacing, and exact step values") {
    FiniteSpace circle = FiniteSpace::circle(8);
    CHECK(circle.diameter() == kPi);
    CHECK(circle.spacing() == 2 * kPi / 8);
    CHECK(circle.kind() == SpaceKind::circle);
    // Steps scale exactly: each distance is (step count) * (2*pi/n).
    const Table& d = circle.metric();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int steps = std::min(std::abs(i - j), 8 - std::abs(i - j));
            CHECK(d.at(i, j) == steps * (2 * kPi / 8));
        }
}

TEST_CASE("interval grids carry coordinates and the absolute-difference metric") {
    FiniteSpace grid = FiniteSpace::interval_grid(-1.0, 1.0, 5);
    CHECK(grid.has_coords());
    CHECK(grid.coord(0) == -1.0);
    CHECK(grid.coord(4) == 1.0);
    CHECK(grid.metric().at(0, 4) == 2.0);
    CHECK(grid.diameter() == 2.0);
    CHECK(grid.spacing() == 0.5);
}

TEST_CASE("space constructors validate their inputs") {
    CHECK_THROWS_AS(FiniteSpace::points(0), InvalidInput);
    CHECK_THROWS_AS(FiniteSpace::circle(0), InvalidInput);
    CHECK_THROWS_AS(FiniteSpace::interval_grid(1.0, 0.0, 3), InvalidInput);
    Table bad(2, 2, 0.0);
    bad.at(0, 1) = -1.0;  // negative distance
    CHECK_THROWS_AS(FiniteSpace::with_metric(bad), InvalidInput);
    Table asym(2, 2, 0.0);
    asym.at(0, 1) = 1.0;  // not symmetric
    CHECK_THROWS_AS(FiniteSpace::with_metric(asym), InvalidInput);
}

TEST_CASE("table couplings must be finite and well shaped") {
    FiniteSpace two = FiniteSpace::points(2);
    CHECK_THROWS_AS(make_table_coupling(two, two, Table(2, 3, 0.0)), InvalidInput);
    Table inf(2, 2, 0.0);
    inf.at(0, 0) = kPlusInfinity;
    CHECK_THROWS_AS(make_table_coupling(two, two, inf), InvalidInput);
}
