#pragma once

#include <vector>

#include "ccx/space.hpp"
#include "ccx/table.hpp"

namespace ccx {

// A real-valued (extended-real, +inf allowed) function on a finite space.
struct ValueTable {
    FiniteSpace space;
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    double at(int i) const { return values.at(static_cast<std::size_t>(i)); }
    bool is_proper() const;
};

ValueTable make_value_table(FiniteSpace space, std::vector<double> values);

// f^c(y) = max_x { c(x,y) - f(x) }, skipping +inf entries of f. The result is
// finite everywhere for proper f.
ValueTable c_conjugate(const ValueTable& f, const Coupling& c);

// f^cc = (f^c) conjugated back through the transposed cost; the largest
// c-convex minorant of f.
ValueTable c_double_conjugate(const ValueTable& f, const Coupling& c);

// True iff max_x |f^cc(x) - f(x)| <= tol.
bool is_c_convex(const ValueTable& f, const Coupling& c, double tol);

// The set { y : f(x0) - f(x) <= c(x0,y) - c(x,y) for all x }, equivalently
// the attainment set of the conjugate inequality f(x0) + f^c(y) <= c(x0,y) + tol.
// Empty result when f(x0) = +inf. Indices returned sorted ascending.
std::vector<int> c_subdifferential(const ValueTable& f, const Coupling& c, int x0,
                                   double tol = 1e-9);

// max over (x,y) of c(x,y) - f(x) - f^c(y). Nonpositive by construction of
// the conjugate (up to rounding).
double check_young(const ValueTable& f, const Coupling& c);

}  // namespace ccx
