#pragma once

#include <limits>
#include <vector>

#include "ccx/monotone.hpp"
#include "ccx/space.hpp"
#include "ccx/table.hpp"

namespace ccx {

// A (possibly extended-real) cost-dominating table on X x Y together with a
// cached selfduality residual (NaN until measured).
struct Lagrangian {
    Coupling coupling;
    Table table;  // rows X, cols Y; +inf allowed
    double selfdual_residual = std::numeric_limits<double>::quiet_NaN();

    double at(int i, int j) const { return table.at(i, j); }
};

// Conjugation against the pairwise-symmetrized cost. The symmetrized cost
// separates as c(x1,y) + c(x,y1), so the joint max over (x1,y1) splits into
// two nested one-dimensional maxes: first collapse x1 at fixed (y, y1), then
// collapse y1 at fixed (y, x). Cost O(nm(n+m)) instead of the quartic direct
// scan; equality with the direct scan is oracle-checked in the tests.
//
// Input lives on X x Y, output on Y x X:
//   out(y, x) = max over (x1,y1) of c(x1,y) + c(x,y1) - G(x1,y1).
Table symmetrized_conjugate_to_v(const Coupling& c, const Table& G_on_xy);

// Mirror direction. Input lives on Y x X, output on X x Y:
//   out(x, y) = max over (y1,x1) of c(x,y1) + c(x1,y) - Phi(y1,x1).
Table symmetrized_conjugate_to_u(const Coupling& c, const Table& Phi_on_yx);

// The conjugate table L^C on Y x X of a Lagrangian.
Table C_conjugate_lagrangian(const Lagrangian& L);

struct SelfdualCheck {
    bool ok = false;
    double residual = 0.0;  // max |L^C(y,x) - L(x,y)|
};

SelfdualCheck is_selfdual(const Lagrangian& L, double tol = 1e-9);

// The cost envelope of a relation:
//   F(x,y) = max over (a,b) in M of c(x,b) + c(a,y) - c(a,b).
// F equals c exactly on M for any c-monotone M; for maximal M it dominates c
// everywhere and the equality set is exactly M.
struct FitzpatrickFunction {
    Relation relation;
    Coupling coupling;
    Table F;   // on X x Y
    Table Fc;  // conjugate table on Y x X
};

FitzpatrickFunction fitzpatrick(const Relation& M, const Coupling& c);

// The reflected iterate u -> max_v { C(u,v) - L(swap v) }; equals the
// conjugate table read back on X x Y. Selfduality of L is exactly the fixed
// point equation reflection(L) = L.
Table selfdual_reflection(const Coupling& c, const Table& L_on_xy);

struct SynthesisResult {
    Lagrangian lagrangian;
    int iterations = 0;
    double final_step = 0.0;
    std::vector<double> step_history;
};

// Constructive selfdual interpolation between a feasible pair of bounds:
// requires psi(u) + phi(v) >= C(u,v) everywhere (checked via one conjugation).
// Starts from the averaged initializer and repeatedly averages the iterate
// with its reflection; each step halves the selfduality defect monotonically
// on finite spaces. Returns the fixed point with measured residual <= tol.
SynthesisResult synthesize_selfdual(const Table& psi_on_xy, const Table& phi_on_yx,
                                    const SymmetrizedCoupling& sc, double tol = 1e-9,
                                    int max_iter = 10000);

// The equality set { (x,y) : L(x,y) - c(x,y) <= tol } of a selfdual
// Lagrangian, with its domain projection. May be empty (unlike Relation).
struct DbarGraph {
    std::vector<IndexPair> pairs;  // sorted lexicographically
    std::vector<int> domain;       // sorted x indices with nonempty sections
};

DbarGraph graph_of_dbar(const Lagrangian& L, double tol = 1e-9);

}  // namespace ccx
