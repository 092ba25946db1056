#include "ccx/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccx/ctransform.hpp"
#include "ccx/errors.hpp"

namespace ccx {

Hamiltonian hamiltonian_of(const Lagrangian& L) {
    const Coupling& c = L.coupling;
    const int nx = c.nx(), ny = c.ny();
    Hamiltonian ham;
    ham.space = c.x;
    ham.parent = L;
    ham.H = Table(nx, nx);
    for (int z = 0; z < nx; ++z) {
        bool row_proper = false;
        for (int y = 0; y < ny; ++y)
            if (std::isfinite(L.at(z, y))) {
                row_proper = true;
                break;
            }
        if (!row_proper)
            throw InvalidInput("hamiltonian_of: Lagrangian row is identically +inf");
        for (int x = 0; x < nx; ++x) {
            double best = -kPlusInfinity;
            for (int y = 0; y < ny; ++y) {
                double l = L.at(z, y);
                if (!std::isfinite(l)) continue;
                best = std::max(best, c.at(x, y) - l);
            }
            ham.H.at(z, x) = best;
        }
    }
    return ham;
}

HamiltonianReport check_hamiltonian_properties(const Hamiltonian& ham, double tol) {
    const Coupling& c = ham.parent.coupling;
    const Table& H = ham.H;
    const int n = H.rows();
    HamiltonianReport rep;

    // (a) every row x -> H(z,x) is c-convex.
    {
        double worst = 0.0;
        for (int z = 0; z < n; ++z) {
            std::vector<double> row(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) row[static_cast<std::size_t>(x)] = H.at(z, x);
            ValueTable f{c.x, row};
            ValueTable fcc = c_double_conjugate(f, c);
            for (int x = 0; x < n; ++x)
                worst = std::max(worst,
                                 std::abs(fcc.values[static_cast<std::size_t>(x)] - H.at(z, x)));
        }
        rep.checks.push_back({"rows_c_convex", worst, worst <= tol});
    }

    // (b) the double conjugate of the negated column -H(.,x) is the row H(x,.).
    {
        double worst = 0.0;
        for (int x1 = 0; x1 < n; ++x1) {
            std::vector<double> col(static_cast<std::size_t>(n));
            for (int z = 0; z < n; ++z) col[static_cast<std::size_t>(z)] = -H.at(z, x1);
            ValueTable f{c.x, col};
            ValueTable fcc = c_double_conjugate(f, c);
            for (int x = 0; x < n; ++x)
                worst = std::max(worst,
                                 std::abs(fcc.values[static_cast<std::size_t>(x)] - H.at(x1, x)));
        }
        rep.checks.push_back({"reflected_double_conjugate", worst, worst <= tol});
    }

    // (c) sub-antisymmetry H(x,z) + H(z,x) <= 0.
    {
        double worst = 0.0;
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z)
                worst = std::max(worst, H.at(x, z) + H.at(z, x));
        worst = std::max(worst, 0.0);
        rep.checks.push_back({"sub_antisymmetry", worst, worst <= tol});
    }

    Table LC = C_conjugate_lagrangian(ham.parent);

    // (d) conjugate reconstruction from H.
    {
        double worst = 0.0;
        for (int y = 0; y < c.ny(); ++y)
            for (int x = 0; x < n; ++x) {
                double best = -kPlusInfinity;
                for (int z = 0; z < n; ++z) best = std::max(best, c.at(z, y) - H.at(x, z));
                worst = std::max(worst, std::abs(best - LC.at(y, x)));
            }
        rep.checks.push_back({"conjugate_reconstruction", worst, worst <= tol});
    }

    // (e) diagonal zero on the equality-set domain.
    {
        double worst = 0.0;
        DbarGraph g = graph_of_dbar(ham.parent, std::max(tol, 1e-9));
        for (int x : g.domain) worst = std::max(worst, std::abs(H.at(x, x)));
        rep.checks.push_back({"diagonal_zero", worst, worst <= tol});
    }

    // (f) reconstruction with the antisymmetrized part (H - H^T)/2.
    {
        double worst = 0.0;
        for (int y = 0; y < c.ny(); ++y)
            for (int x = 0; x < n; ++x) {
                double best = -kPlusInfinity;
                for (int z = 0; z < n; ++z) {
                    double has = 0.5 * (H.at(x, z) - H.at(z, x));
                    best = std::max(best, c.at(z, y) - has);
                }
                worst = std::max(worst, std::abs(best - LC.at(y, x)));
            }
        rep.checks.push_back({"antisymmetrized_reconstruction", worst, worst <= tol});
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& r) { return r.pass; });
    return rep;
}

std::vector<int> partial_c_subdiff_2(const Hamiltonian& ham, int z, int x, double tol) {
    const Coupling& c = ham.parent.coupling;
    const int n = ham.H.rows();
    if (z < 0 || z >= n || x < 0 || x >= n)
        throw InvalidInput("partial_c_subdiff_2: index out of range");
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = ham.H.at(z, i);
    ValueTable f{c.x, row};
    return c_subdifferential(f, c, x, tol);
}

std::vector<std::vector<int>> diagonal_subdifferential(const Hamiltonian& ham, double tol) {
    const int n = ham.H.rows();
    DbarGraph g = graph_of_dbar(ham.parent, tol);
    std::vector<bool> in_domain(static_cast<std::size_t>(n), false);
    for (int x : g.domain) in_domain[static_cast<std::size_t>(x)] = true;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        if (in_domain[static_cast<std::size_t>(x)])
            out[static_cast<std::size_t>(x)] = partial_c_subdiff_2(ham, x, x, tol);
    return out;
}

SingleValuednessScan single_valuedness_scan(const Hamiltonian& ham, double tie_tol) {
    const int n = ham.H.rows();
    SingleValuednessScan scan;
    int singletons = 0;
    for (int x = 0; x < n; ++x) {
        std::vector<int> s = partial_c_subdiff_2(ham, x, x, tie_tol);
        if (s.size() == 1)
            ++singletons;
        else
            scan.multivalued.push_back(x);
    }
    scan.fraction = n > 0 ? static_cast<double>(singletons) / n : 0.0;
    return scan;
}

GradientConsistencyReport gradient_consistency_check(const Hamiltonian& ham,
                                                     const std::vector<int>& T) {
    const Coupling& c = ham.parent.coupling;
    const FiniteSpace& X = c.x;
    const int n = X.size();
    if (static_cast<int>(T.size()) != n)
        throw InvalidInput("gradient_consistency_check: map size mismatch");
    if (c.form != CostForm::neg_half_sqdist)
        throw InvalidInput(
            "gradient_consistency_check: cost must be the -d^2/2 closed-form family");
    if (X.kind() != SpaceKind::circle && X.kind() != SpaceKind::interval_grid)
        throw InvalidInput("gradient_consistency_check: space is not a grid or circle");
    const double h = X.spacing();
    if (!(h > 0.0)) throw InvalidInput("gradient_consistency_check: degenerate spacing");

    GradientConsistencyReport rep;
    rep.h = h;
    rep.stencil = (X.kind() == SpaceKind::circle) ? "central" : "central+one-sided";
    const bool circle = X.kind() == SpaceKind::circle;
    const double two_pi = 2.0 * std::numbers::pi;

    for (int x = 0; x < n; ++x) {
        // Finite difference of x' -> H(x,x') at x' = x.
        double fd;
        if (circle) {
            int xp = (x + 1) % n, xm = (x - 1 + n) % n;
            fd = (ham.H.at(x, xp) - ham.H.at(x, xm)) / (2.0 * h);
        } else if (x == 0) {
            fd = (ham.H.at(x, 1) - ham.H.at(x, 0)) / h;
        } else if (x == n - 1) {
            fd = (ham.H.at(x, n - 1) - ham.H.at(x, n - 2)) / h;
        } else {
            fd = (ham.H.at(x, x + 1) - ham.H.at(x, x - 1)) / (2.0 * h);
        }
        // Analytic first-slot derivative of -d^2/2 at (x, Tx): the signed
        // offset from x to Tx (geodesic, wrapped to (-pi, pi] on the circle).
        double offset;
        int t = T[static_cast<std::size_t>(x)];
        if (circle) {
            offset = X.coord(t) - X.coord(x);
            while (offset > std::numbers::pi) offset -= two_pi;
            while (offset <= -std::numbers::pi) offset += two_pi;
            // Express as an exact multiple of the spacing to mirror the
            // step-quantized metric.
            offset = h * std::lround(offset / h);
        } else {
            offset = X.coord(t) - X.coord(x);
        }
        double dev = std::abs(fd - offset);
        rep.deviations.push_back(dev);
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    return rep;
}

double lipschitz_ratio(const Table& A, const FiniteSpace& row_space,
                       const FiniteSpace& col_space) {
    const Table& dr = row_space.metric();
    const Table& dc = col_space.metric();
    double worst = 0.0;
    for (int j = 0; j < A.cols(); ++j)
        for (int p = 0; p < A.rows(); ++p)
            for (int q = p + 1; q < A.rows(); ++q) {
                double d = dr.at(p, q);
                if (d <= 0.0) continue;
                worst = std::max(worst, std::abs(A.at(p, j) - A.at(q, j)) / d);
            }
    for (int i = 0; i < A.rows(); ++i)
        for (int p = 0; p < A.cols(); ++p)
            for (int q = p + 1; q < A.cols(); ++q) {
                double d = dc.at(p, q);
                if (d <= 0.0) continue;
                worst = std::max(worst, std::abs(A.at(i, p) - A.at(i, q)) / d);
            }
    return worst;
}

LipschitzReport lipschitz_bound_check(const Hamiltonian& ham, double tol) {
    const Coupling& c = ham.parent.coupling;
    if (c.form != CostForm::neg_half_sqdist)
        throw InvalidInput("lipschitz_bound_check: cost must be the -d^2/2 family");
    if (!c.x.has_metric() || !c.y.has_metric())
        throw InvalidInput("lipschitz_bound_check: spaces need metrics");
    LipschitzReport rep;
    rep.bound = 2.0 * c.x.diameter();
    rep.ratio_L = lipschitz_ratio(ham.parent.table, c.x, c.y);
    rep.ratio_H = lipschitz_ratio(ham.H, c.x, c.x);
    rep.pass = rep.ratio_L <= rep.bound + tol && rep.ratio_H <= rep.bound + tol;
    return rep;
}

}  // namespace ccx
