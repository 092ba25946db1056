#pragma once

#include <string>
#include <vector>

#include "ccx/selfdual.hpp"

namespace ccx {

// The partial conjugate H(z,x) = max_y { c(x,y) - L(z,y) } of a Lagrangian,
// on X x X. For selfdual L it is sub-antisymmetric, vanishes on the diagonal
// of its domain, and reconstructs the conjugate of L.
struct Hamiltonian {
    FiniteSpace space;  // X
    Table H;            // rows z, cols x
    Lagrangian parent;  // the Lagrangian (and coupling) it was derived from

    double at(int z, int x) const { return H.at(z, x); }
};

Hamiltonian hamiltonian_of(const Lagrangian& L);

struct CheckResult {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct HamiltonianReport {
    std::vector<CheckResult> checks;  // six named property checks
    bool all_pass = false;
};

// The property suite for Hamiltonians of selfdual Lagrangians:
//   rows_c_convex                 each row x -> H(z,x) is c-convex
//   reflected_double_conjugate    [-H(.,x)]^cc equals the row H(x,.)
//   sub_antisymmetry              H(x,z) + H(z,x) <= 0
//   conjugate_reconstruction      L^C(y,x) = max_z { c(z,y) - H(x,z) }
//   diagonal_zero                 H(x,x) = 0 on the domain of the equality set
//   antisymmetrized_reconstruction  same reconstruction with (H - H^T)/2
HamiltonianReport check_hamiltonian_properties(const Hamiltonian& H, double tol = 1e-8);

// c-subdifferential of the row function x' -> H(z,x') at x.
std::vector<int> partial_c_subdiff_2(const Hamiltonian& H, int z, int x,
                                     double tol = 1e-9);

// Diagonal subdifferential map with the off-domain convention: x -> the set
// of the diagonal c-subdifferential when x lies in the equality-set domain of
// the parent Lagrangian, empty otherwise.
std::vector<std::vector<int>> diagonal_subdifferential(const Hamiltonian& H,
                                                       double tol = 1e-9);

struct SingleValuednessScan {
    double fraction = 0.0;           // share of diagonal points with singleton sets
    std::vector<int> multivalued;    // diagonal points with 0 or >= 2 members
};

SingleValuednessScan single_valuedness_scan(const Hamiltonian& H, double tie_tol = 1e-6);

struct GradientConsistencyReport {
    double max_deviation = 0.0;
    std::vector<double> deviations;  // per diagonal point
    std::string stencil;             // "central" or "central+one-sided"
    double h = 0.0;                  // grid spacing
};

// Finite-difference derivative of x' -> H(x,x') at x' = x compared with the
// analytic first-slot derivative of the cost at (x, Tx). Requires the cost
// form -d^2/2 on a circle or interval grid, where that derivative has the
// closed form (signed geodesic offset from x to Tx).
GradientConsistencyReport gradient_consistency_check(const Hamiltonian& H,
                                                     const std::vector<int>& T);

// Largest |A(p,j) - A(q,j)| / d(p,q) over row pairs, maximized with the
// column-slot analogue; the empirical Lipschitz constant of a two-slot table.
double lipschitz_ratio(const Table& A, const FiniteSpace& row_space,
                       const FiniteSpace& col_space);

struct LipschitzReport {
    double ratio_L = 0.0;
    double ratio_H = 0.0;
    double bound = 0.0;  // 2 * diameter
    bool pass = false;
};

// Checks both the Lagrangian and its Hamiltonian against the 2 * diam bound
// valid for the -d^2/2 cost family.
LipschitzReport lipschitz_bound_check(const Hamiltonian& H, double tol = 1e-9);

}  // namespace ccx
