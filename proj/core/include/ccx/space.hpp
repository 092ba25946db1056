#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccx/table.hpp"

namespace ccx {

// How a space was constructed; closed-form geometry (grids, circles) unlocks
// analytic derivatives and geodesic paths downstream.
enum class SpaceKind {
    generic,        // indexed points, no geometry beyond an optional metric
    interval_grid,  // evenly spaced points on a real interval
    circle,         // n points at angles 2*pi*k/n with arclength metric
};

// An indexed finite set of points, optionally with 1-D coordinates and a
// ground metric.
class FiniteSpace {
  public:
    // Empty space; every nonempty instance comes from a named factory.
    FiniteSpace() = default;

    static FiniteSpace points(int n);
    static FiniteSpace from_coords(std::vector<double> coords);
    // Evenly spaced grid of n points on [a, b] with metric |x - y|.
    static FiniteSpace interval_grid(double a, double b, int n);
    // n points on the unit circle; metric is the arclength geodesic distance,
    // stored as (step count) * (2*pi/n) so quarter-turn and antipodal values
    // are exact products.
    static FiniteSpace circle(int n);
    // Generic space with an explicit ground metric (symmetric, nonnegative,
    // zero diagonal) and optional coordinates.
    static FiniteSpace with_metric(Table metric, std::vector<double> coords = {});

    int size() const { return n_; }
    SpaceKind kind() const { return kind_; }
    bool has_coords() const { return !coords_.empty(); }
    bool has_metric() const { return metric_.has_value(); }

    double coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
    const std::vector<double>& coords() const { return coords_; }
    const Table& metric() const;

    // Largest pairwise distance.
    double diameter() const;
    // Grid/circle spacing (distance between adjacent points).
    double spacing() const;

  private:
    int n_ = 0;
    SpaceKind kind_ = SpaceKind::generic;
    std::vector<double> coords_;
    std::optional<Table> metric_;
};

// How a coupling's entries arise; closed forms allow analytic partial
// derivatives in diagnostics.
enum class CostForm {
    generic,
    inner_product,     // c(x, y) = x * y from 1-D coordinates
    neg_half_sqdist,   // c(x, y) = -d(x, y)^2 / 2 from the ground metric
    arclength,         // c(x, y) = d(x, y) on a circle
};

// A dense real cost table over X x Y. Entries are always finite.
struct Coupling {
    FiniteSpace x;
    FiniteSpace y;
    Table c;  // c.rows() == x.size(), c.cols() == y.size()
    CostForm form = CostForm::generic;

    double at(int i, int j) const { return c.at(i, j); }
    int nx() const { return x.size(); }
    int ny() const { return y.size(); }
};

Coupling make_inner_product_coupling(const std::vector<double>& xgrid,
                                     const std::vector<double>& ygrid);
Coupling make_neg_half_sqdist_coupling(const FiniteSpace& space);
Coupling make_arclength_coupling(const FiniteSpace& circle);
// Arbitrary finite table over given spaces.
Coupling make_table_coupling(FiniteSpace x, FiniteSpace y, Table c);

// Index pairs addressing the product spaces U = X x Y and V = Y x X.
struct UPoint {
    int x, y;
};
struct VPoint {
    int y, x;
};

// Coordinate swaps between the two product spaces; inverse to each other.
inline VPoint swap_to_v(UPoint u) { return VPoint{u.y, u.x}; }
inline UPoint swap_to_u(VPoint v) { return UPoint{v.x, v.y}; }

// The pairwise-symmetrized cost on U x V:
//   C((x1,y1), (y2,x2)) = c(x1,y2) + c(x2,y1).
// It satisfies C(u, v) = C(swap(v), swap(u)) identically: both sides read the
// same two table entries.
struct SymmetrizedCoupling {
    Coupling base;

    double eval(UPoint u, VPoint v) const;
};

double eval_C(const SymmetrizedCoupling& sc, UPoint u, VPoint v);

}  // namespace ccx
