#include "ccx/space.hpp"

#include <cmath>
#include <numbers>

#include "ccx/errors.hpp"

namespace ccx {

FiniteSpace FiniteSpace::points(int n) {
    if (n < 1) throw InvalidInput("FiniteSpace: need at least one point");
    FiniteSpace s;
    s.n_ = n;
    return s;
}

FiniteSpace FiniteSpace::from_coords(std::vector<double> coords) {
    if (coords.empty()) throw InvalidInput("FiniteSpace: empty coordinate list");
    FiniteSpace s;
    s.n_ = static_cast<int>(coords.size());
    s.coords_ = std::move(coords);
    Table d(s.n_, s.n_);
    for (int i = 0; i < s.n_; ++i)
        for (int j = 0; j < s.n_; ++j) d.at(i, j) = std::abs(s.coords_[i] - s.coords_[j]);
    s.metric_ = std::move(d);
    return s;
}

FiniteSpace FiniteSpace::interval_grid(double a, double b, int n) {
    if (n < 1) throw InvalidInput("interval_grid: need at least one point");
    if (!(a <= b)) throw InvalidInput("interval_grid: need a <= b");
    std::vector<double> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        coords[static_cast<std::size_t>(i)] =
            (n == 1) ? a : a + (b - a) * static_cast<double>(i) / (n - 1);
    FiniteSpace s = from_coords(std::move(coords));
    s.kind_ = SpaceKind::interval_grid;
    return s;
}

FiniteSpace FiniteSpace::circle(int n) {
    if (n < 1) throw InvalidInput("circle: need at least one point");
    FiniteSpace s;
    s.n_ = n;
    s.kind_ = SpaceKind::circle;
    const double step = 2.0 * std::numbers::pi / n;
    s.coords_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.coords_[static_cast<std::size_t>(i)] = step * i;
    // Geodesic distance as (shortest step count) * step, so values at
    // special fractions of the circumference are exact products.
    Table d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = std::abs(i - j);
            k = std::min(k, n - k);
            d.at(i, j) = step * k;
        }
    s.metric_ = std::move(d);
    return s;
}

FiniteSpace FiniteSpace::with_metric(Table metric, std::vector<double> coords) {
    const int n = metric.rows();
    if (n < 1 || metric.cols() != n) throw InvalidInput("with_metric: metric must be square");
    if (!metric.all_finite()) throw InvalidInput("with_metric: non-finite metric entry");
    for (int i = 0; i < n; ++i) {
        if (metric.at(i, i) != 0.0) throw InvalidInput("with_metric: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (metric.at(i, j) < 0.0) throw InvalidInput("with_metric: negative distance");
            if (metric.at(i, j) != metric.at(j, i))
                throw InvalidInput("with_metric: metric is not symmetric");
        }
    }
    if (!coords.empty() && static_cast<int>(coords.size()) != n)
        throw InvalidInput("with_metric: coordinate count mismatch");
    FiniteSpace s;
    s.n_ = n;
    s.kind_ = SpaceKind::generic;
    s.coords_ = std::move(coords);
    s.metric_ = std::move(metric);
    return s;
}

const Table& FiniteSpace::metric() const {
    if (!metric_) throw InvalidInput("FiniteSpace: no metric available");
    return *metric_;
}

double FiniteSpace::diameter() const {
    const Table& d = metric();
    double m = 0.0;
    for (double x : d.data()) m = std::max(m, x);
    return m;
}

double FiniteSpace::spacing() const {
    if (kind_ == SpaceKind::circle) return 2.0 * std::numbers::pi / n_;
    if (kind_ == SpaceKind::interval_grid) {
        if (n_ < 2) return 0.0;
        return coords_[1] - coords_[0];
    }
    throw InvalidInput("spacing: space is not a grid or circle discretization");
}

Coupling make_inner_product_coupling(const std::vector<double>& xgrid,
                                     const std::vector<double>& ygrid) {
    if (xgrid.empty() || ygrid.empty())
        throw InvalidInput("make_inner_product_coupling: empty grid");
    FiniteSpace xs = FiniteSpace::from_coords(xgrid);
    FiniteSpace ys = FiniteSpace::from_coords(ygrid);
    Table t(xs.size(), ys.size());
    for (int i = 0; i < xs.size(); ++i)
        for (int j = 0; j < ys.size(); ++j) t.at(i, j) = xgrid[i] * ygrid[j];
    return Coupling{std::move(xs), std::move(ys), std::move(t), CostForm::inner_product};
}

Coupling make_neg_half_sqdist_coupling(const FiniteSpace& space) {
    if (!space.has_metric())
        throw InvalidInput("make_neg_half_sqdist_coupling: space has no metric");
    const Table& d = space.metric();
    Table t(space.size(), space.size());
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
            t.at(i, j) = -d.at(i, j) * d.at(i, j) / 2.0;
    return Coupling{space, space, std::move(t), CostForm::neg_half_sqdist};
}

Coupling make_arclength_coupling(const FiniteSpace& circle) {
    if (circle.kind() != SpaceKind::circle)
        throw InvalidInput("make_arclength_coupling: space is not a circle discretization");
    return Coupling{circle, circle, circle.metric(), CostForm::arclength};
}

Coupling make_table_coupling(FiniteSpace x, FiniteSpace y, Table c) {
    if (c.rows() != x.size() || c.cols() != y.size())
        throw InvalidInput("make_table_coupling: table shape does not match spaces");
    if (!c.all_finite())
        throw InvalidInput("make_table_coupling: cost entries must be finite");
    return Coupling{std::move(x), std::move(y), std::move(c), CostForm::generic};
}

double SymmetrizedCoupling::eval(UPoint u, VPoint v) const {
    const Table& c = base.c;
    if (u.x < 0 || u.x >= c.rows() || u.y < 0 || u.y >= c.cols() || v.x < 0 ||
        v.x >= c.rows() || v.y < 0 || v.y >= c.cols())
        throw InvalidInput("SymmetrizedCoupling::eval: index out of range");
    return c.at(u.x, v.y) + c.at(v.x, u.y);
}

double eval_C(const SymmetrizedCoupling& sc, UPoint u, VPoint v) { return sc.eval(u, v); }

}  // namespace ccx
