#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ccx/ctransform.hpp"
#include "ccx/errors.hpp"
#include "ccx/inversion.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "fixtures.hpp"

using namespace ccx;

namespace {

Coupling sym3_inner() {
    return make_inner_product_coupling({-1.0, 0.0, 1.0}, {-1.0, 0.0, 1.0});
}

Table quadratic_hamiltonian_table(const Coupling& c) {
    int n = c.nx();
    Table H(n, n);
    for (int z = 0; z < n; ++z)
        for (int x = 0; x < n; ++x) {
            double xz = c.x.coord(z), xx = c.x.coord(x);
            H.at(z, x) = xx * xx / 2 - xz * xz / 2;
        }
    return H;
}

Lagrangian synthesized(ccxt::Rng& rng, int n, Relation* out_relation = nullptr) {
    Coupling c = ccxt::random_coupling(rng, n, n);
    Relation M = ccxt::random_maximal_relation(rng, c);
    if (out_relation) *out_relation = M;
    FitzpatrickFunction fp = fitzpatrick(M, c);
    return synthesize_selfdual(fp.F, fp.Fc, SymmetrizedCoupling{c}).lagrangian;
}

}  // namespace

TEST_CASE("rotations are skew for the arclength cost") {
    Coupling c = make_arclength_coupling(FiniteSpace::circle(8));
    SkewCheck sk = is_c_skew(SkewMap{ccxt::rotation_map(8, 2)}, c);
    CHECK(sk.ok);
    CHECK(sk.residual == 0.0);
}

TEST_CASE("constant maps are skew for every cost") {
    ccxt::Rng rng(137);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(2, 7);
        Coupling c = ccxt::random_coupling(rng, n, n);
        SkewMap b{std::vector<int>(static_cast<std::size_t>(n), rng.uniform_int(0, n - 1))};
        SkewCheck sk = is_c_skew(b, c);
        CHECK(sk.ok);
        CHECK(sk.residual == 0.0);
    }
}

TEST_CASE("the identity fails skewness for the inner-product cost") {
    Coupling c = make_inner_product_coupling({0.0, 1.0}, {0.0, 1.0});
    SkewCheck sk = is_c_skew(SkewMap{{0, 1}}, c);
    CHECK_FALSE(sk.ok);
    CHECK(sk.residual == 1.0);
}

TEST_CASE("skewness defects ignore constant cost shifts") {
    ccxt::Rng rng(139);
    for (int rep = 0; rep < 5; ++rep) {
        int n = rng.uniform_int(2, 6);
        Coupling c = ccxt::random_coupling(rng, n, n);
        Table shifted(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) shifted.at(i, j) = c.at(i, j) + 0.75;
        Coupling cs = make_table_coupling(c.x, c.y, std::move(shifted));
        std::vector<int> B = ccxt::random_map(rng, n, n);
        CHECK(std::abs(is_c_skew(SkewMap{B}, c).residual -
                       is_c_skew(SkewMap{B}, cs).residual) <= 1e-12);
    }
}

TEST_CASE("the quadratic deviation functional vanishes exactly at its target") {
    Coupling c = sym3_inner();
    Table t(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double x = c.x.coord(i), y = c.y.coord(j);
            t.at(i, j) = (x * x + y * y) / 2;
        }
    Lagrangian L{c, t};

    IpMinimization m = minimize_Ip(L, 2);  // target value 1
    CHECK(m.min_value == 0.0);
    CHECK(m.attained);
    CHECK(m.argmin == std::vector<int>{2});
    REQUIRE(m.values.size() == 3);
    CHECK(m.values[0] == 2.0);
    CHECK(m.values[1] == 0.5);
    CHECK(m.values[2] == 0.0);

    CHECK_THROWS_AS(minimize_Ip(L, 3), InvalidInput);
    CHECK_THROWS_AS(minimize_Ip(L, -1), InvalidInput);
}

TEST_CASE("members of the defining relation minimize the deviation to zero") {
    ccxt::Rng rng(131);
    Relation M;
    Lagrangian L = synthesized(rng, 5, &M);
    for (const IndexPair& pr : M.pairs) {
        IpMinimization m = minimize_Ip(L, pr.second);
        CHECK(m.attained);
        CHECK(m.min_value <= 1e-9);
        CHECK(std::find(m.argmin.begin(), m.argmin.end(), pr.first) != m.argmin.end());
        CHECK(std::is_sorted(m.argmin.begin(), m.argmin.end()));
    }
    // Nonnegativity holds for every target, member or not.
    for (int p = 0; p < 5; ++p) CHECK(minimize_Ip(L, p).min_value >= -1e-12);
}

TEST_CASE("the saddle collapses for the zero Hamiltonian") {
    ccxt::Rng rng(149);
    for (int rep = 0; rep < 5; ++rep) {
        int n = rng.uniform_int(2, 6);
        Coupling c = ccxt::random_coupling(rng, n, n);
        SkewMap b{std::vector<int>(static_cast<std::size_t>(n), rng.uniform_int(0, n - 1))};
        MinimaxReport mm = minimax_gap(Table(n, n, 0.0), b, c);
        CHECK(std::abs(mm.inf_sup) <= 1e-12);
        CHECK(std::abs(mm.sup_inf) <= 1e-12);
        CHECK(mm.gap <= 1e-12);
        CHECK(mm.chain_inf_residual <= 1e-12);
        CHECK(mm.chain_sup_residual <= 1e-12);
        CHECK(mm.antisymmetry_residual == 0.0);
    }
}

TEST_CASE("the quadratic saddle closes with the expected profile") {
    Coupling c = sym3_inner();
    MinimaxReport mm = minimax_gap(quadratic_hamiltonian_table(c), SkewMap{{1, 1, 1}}, c);
    CHECK(mm.inf_sup == 0.0);
    CHECK(mm.sup_inf == 0.0);
    CHECK(mm.gap == 0.0);
    REQUIRE(mm.i_values.size() == 3);
    CHECK(mm.i_values[0] == 0.5);
    CHECK(mm.i_values[1] == 0.0);
    CHECK(mm.i_values[2] == 0.5);
    CHECK(mm.chain_inf_residual == 0.0);
    CHECK(mm.chain_sup_residual == 0.0);
}

TEST_CASE("adversarial antisymmetric tables keep weak duality and the chains") {
    ccxt::Rng rng(151);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(2, 6);
        Coupling c = ccxt::random_coupling(rng, n, n);
        Table W(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) W.at(i, j) = rng.uniform(-1.0, 1.0);
        Table H(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) H.at(i, j) = W.at(i, j) - W.at(j, i);
        SkewMap b{std::vector<int>(static_cast<std::size_t>(n), rng.uniform_int(0, n - 1))};
        MinimaxReport mm = minimax_gap(H, b, c);
        CHECK(mm.gap >= -1e-12);
        CHECK(mm.chain_inf_residual <= 1e-12);
        CHECK(mm.chain_sup_residual <= 1e-12);
        CHECK(mm.antisymmetry_residual == 0.0);
    }
}

TEST_CASE("a table that is not antisymmetric is rejected") {
    Coupling c = make_inner_product_coupling({0.0, 1.0}, {0.0, 1.0});
    CHECK_THROWS_AS(minimax_gap(Table(2, 2, 1.0), SkewMap{{0, 0}}, c), InvalidInput);
}

TEST_CASE("inverting the zero potential through the zero adjoint is free") {
    Coupling c = make_inner_product_coupling({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0});
    ValueTable phi = make_value_table(c.x, {0.0, 0.0, 0.0});
    SkewInversionReport r = invert_via_skew(phi, SkewMap{{0, 0, 0}}, c);
    CHECK(r.min_value == 0.0);
    CHECK(r.attained);
    CHECK(r.inclusion_verified);
    CHECK(r.argmin == std::vector<int>{0, 1, 2});
    CHECK(r.skew_residual == 0.0);
}

TEST_CASE("the quadratic potential inverts at the adjoint target") {
    Coupling c = sym3_inner();
    ValueTable phi = make_value_table(c.x, {0.5, 0.0, 0.5});
    SkewInversionReport r = invert_via_skew(phi, SkewMap{{1, 1, 1}}, c);
    CHECK(r.min_value == 0.0);
    CHECK(r.attained);
    CHECK(r.inclusion_verified);
    REQUIRE(!r.argmin.empty());
    CHECK(std::find(r.argmin.begin(), r.argmin.end(), 1) != r.argmin.end());
}

TEST_CASE("a quarter turn of the flat potential has no solution on the grid") {
    Coupling c = make_arclength_coupling(FiniteSpace::circle(8));
    ValueTable phi = make_value_table(c.x, std::vector<double>(8, 0.0));
    SkewInversionReport r = invert_via_skew(phi, SkewMap{ccxt::rotation_map(8, 2)}, c);
    CHECK(r.min_value == std::numbers::pi / 2);
    CHECK_FALSE(r.attained);
    CHECK_FALSE(r.inclusion_verified);
    // The objective is constant, so every point ties for the minimum.
    CHECK(static_cast<int>(r.argmin.size()) == 8);
}

TEST_CASE("inversion refuses an adjoint that is not skew") {
    Coupling c = make_inner_product_coupling({0.0, 1.0}, {0.0, 1.0});
    ValueTable phi = make_value_table(c.x, {0.0, 0.0});
    CHECK_THROWS_AS(invert_via_skew(phi, SkewMap{{0, 1}}, c), InvalidInput);
}

TEST_CASE("the inversion objective is never negative") {
    ccxt::Rng rng(157);
    for (int rep = 0; rep < 10; ++rep) {
        int n = rng.uniform_int(2, 7);
        Coupling c = ccxt::random_coupling(rng, n, n);
        std::vector<double> vals(static_cast<std::size_t>(n));
        for (double& v : vals) v = rng.uniform(-1.0, 1.0);
        SkewMap b{std::vector<int>(static_cast<std::size_t>(n), rng.uniform_int(0, n - 1))};
        SkewInversionReport r = invert_via_skew(make_value_table(c.x, vals), b, c);
        for (double v : r.values) CHECK(v >= -1e-12);
        // A constant adjoint always admits a solution: the conjugate's
        // defining maximum is attained at some grid point.
        CHECK(r.attained);
        CHECK(r.inclusion_verified);
        CHECK(r.min_value <= 1e-9);
    }
}

TEST_CASE("squared distance to a frozen point is chord-convex on a grid") {
    FiniteSpace grid = FiniteSpace::interval_grid(0.0, 1.0, 5);
    Table F(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            double d = grid.coord(i) - grid.coord(j);
            F.at(i, j) = d * d;
        }
    CurveFamily chords = ccxt::grid_chord_curves(5);
    ArcwiseReport first = check_arcwise_convexity(F, chords, CurveVariable::first, true, 1e-12);
    CHECK(first.ok);
    CHECK(first.worst_violation <= 0.0);
    ArcwiseReport second = check_arcwise_convexity(F, chords, CurveVariable::second, true, 1e-12);
    CHECK(second.ok);
}

TEST_CASE("the circle metric violates chord convexity at the antipode") {
    FiniteSpace circ = FiniteSpace::circle(8);
    CurveFamily geodesics = ccxt::circle_geodesic_curves(8);
    ArcwiseReport rep =
        check_arcwise_convexity(circ.metric(), geodesics, CurveVariable::second, true, 1e-9);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.has_witness);
    CHECK(rep.worst_violation == std::numbers::pi / 2);
    CHECK(rep.witness_a == 0);
    CHECK(rep.witness_b == 4);
    CHECK(rep.witness_node == 2);
    CHECK(rep.witness_frozen == 6);

    ArcwiseReport flip =
        check_arcwise_convexity(circ.metric(), geodesics, CurveVariable::first, true, 1e-9);
    CHECK_FALSE(flip.ok);
    CHECK(flip.worst_violation == std::numbers::pi / 2);
}

TEST_CASE("conjugates of concave band potentials are chord-convex") {
    FiniteSpace xg = FiniteSpace::interval_grid(-0.75, 1.75, 51);
    FiniteSpace yg = FiniteSpace::interval_grid(0.0, 1.0, 11);
    Table ct(xg.size(), yg.size());
    for (int i = 0; i < xg.size(); ++i)
        for (int j = 0; j < yg.size(); ++j) {
            double d = xg.coord(i) - yg.coord(j);
            ct.at(i, j) = -d * d;
        }
    Coupling cp = make_table_coupling(xg, yg, std::move(ct));
    std::vector<double> xs;
    for (int i = 0; i < xg.size(); ++i) xs.push_back(xg.coord(i));

    ccxt::Rng rng(4242);
    std::vector<double> band = ccxt::concave_band_potential(rng, xs, -1.6, -0.8, 0.15);
    ValueTable fc = c_conjugate(make_value_table(xg, band), cp);
    Table row(1, yg.size());
    for (int j = 0; j < yg.size(); ++j) row.at(0, j) = fc.at(j);
    ArcwiseReport rep = check_arcwise_convexity(row, ccxt::grid_chord_curves(yg.size()),
                                                CurveVariable::second, true, 1e-9);
    CHECK(rep.ok);
    CHECK(rep.worst_violation <= 0.0);
}

TEST_CASE("the slope criterion certifies the quadratic potential") {
    Coupling c = sym3_inner();
    ValueTable phi = make_value_table(c.x, {0.5, 0.0, 0.5});
    CconvexityCriterionReport rep =
        check_cconvexity_criterion(phi, c, ccxt::grid_chord_curves(3), 1e-9);
    CHECK(rep.slope_hypothesis);
    CHECK(rep.arcwise_hypothesis);
    CHECK(rep.phi_is_c_convex);
    CHECK(rep.implication_holds);
    CHECK(rep.c_convexity_residual <= 1e-12);
    CHECK(rep.chain_identity_residual <= 1e-12);
    CHECK(rep.max_minimax_gap <= 1e-12);
}

TEST_CASE("a steep dip breaks the slope hypothesis and the conclusion") {
    Coupling c = sym3_inner();
    ValueTable phi = make_value_table(c.x, {0.0, -3.0, 0.0});
    CconvexityCriterionReport rep =
        check_cconvexity_criterion(phi, c, ccxt::grid_chord_curves(3), 1e-9);
    CHECK_FALSE(rep.slope_hypothesis);
    CHECK(rep.slope_margin < 0.0);
    CHECK_FALSE(rep.phi_is_c_convex);
    CHECK(rep.c_convexity_residual > 1.0);
    // With a failed hypothesis the criterion asserts nothing, so it holds.
    CHECK(rep.implication_holds);
}

TEST_CASE("double conjugates satisfy the criterion conclusion by construction") {
    ccxt::Rng rng(163);
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
        int n = rng.uniform_int(3, 6);
        FiniteSpace grid = FiniteSpace::interval_grid(0.0, 1.0, n);
        Table ct(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ct.at(i, j) = rng.uniform(-1.0, 1.0);
        Coupling c = make_table_coupling(grid, grid, std::move(ct));
        std::vector<double> vals(static_cast<std::size_t>(n));
        for (double& v : vals) v = rng.uniform(-1.0, 1.0);
        ValueTable hull = c_double_conjugate(make_value_table(grid, vals), c);
        CconvexityCriterionReport rep =
            check_cconvexity_criterion(hull, c, ccxt::grid_chord_curves(n), 1e-9);
        CHECK(rep.phi_is_c_convex);
        CHECK(rep.implication_holds);
    }
}
