#pragma once

#include <string>
#include <vector>

#include "ccx/exact_lp.hpp"
#include "ccx/hamiltonian.hpp"
#include "ccx/monotone.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "ccx/table.hpp"

namespace ccx {

// Probability measure on a finite space.
struct DiscreteMeasure {
    FiniteSpace space;
    std::vector<double> weights;

    int size() const { return space.size(); }
    double max_weight() const;
};

// Validates nonnegativity and total mass 1 (within 1e-12).
DiscreteMeasure make_measure(FiniteSpace space, std::vector<double> weights);
DiscreteMeasure uniform_measure(FiniteSpace space);

// Symmetrized transport cost on X x X for a fixed map T: X -> Y:
// chat(i,j) = (c(i, T j) + c(j, T i)) / 2.
Table symmetrized_cost(const Coupling& c, const std::vector<int>& T);

// Primal symmetric transport problem: maximize the chat-cost over couplings
// of mu with itself; an optimizer is symmetrized to (pi + pi^T)/2, which
// preserves the objective because chat is symmetric.
struct MkSymResult {
    Table chat;
    Table plan;  // symmetric optimizer
    double value;
    std::string value_exact;
    LpResult lp;  // raw solver output, before symmetrization
};
MkSymResult solve_mk_sym(const Coupling& c, const std::vector<int>& T,
                         const DiscreteMeasure& mu);

// Dual certificate: potentials on the doubled spaces U = X x Y and
// V = Y x X, feasible for the symmetrized coupling on the full product,
// together with the selfdual Lagrangian synthesized from them.
struct DualCertificate {
    Table psi;  // on X x Y
    Table phi;  // on Y x X
    Lagrangian selfdual;
    int iterations;    // synthesis iterations
    double objective;  // sum_i mu_i * L(x_i, T x_i)
};
DualCertificate solve_dk_sym(const Coupling& c, const std::vector<int>& T,
                             const DiscreteMeasure& mu, double tol = 1e-9,
                             int max_iter = 10000);

bool verify_duality(double plan_value, const DualCertificate& certificate, double tol);

// Independent solve of the doubled problem over the atoms
// u_i = (x_i, T x_i) and v_j = (T x_j, x_j), with marginals (mu, mu).
// Its value equals twice the symmetric optimum.
LpResult solve_lifted_mk(const Coupling& c, const std::vector<int>& T,
                         const DiscreteMeasure& mu);

// On the support of an optimal symmetric plan, the certificate is tight:
// c(z, Tx) - H(x,z) - L(x, Tx) = 0, and the plan integral of H vanishes.
struct SupportInclusionReport {
    double max_equality_residual;
    double plan_integral_H;
    int support_size;
    bool pass;
};
// Throws CertificateMismatch (message carries the witness) when the
// pointwise equality is violated beyond tol on a support pair.
SupportInclusionReport extract_support_inclusion(const Table& plan, const Lagrangian& L,
                                                 const std::vector<int>& T, double tol);

// Reads the support map off a plan whose rows are single atoms. The
// support threshold is 1e-9 times the largest weight of mu. When some row
// holds several atoms the plan is not a graph and is_graph is false (a
// valid outcome, not an error).
struct InvolutionReport {
    bool is_graph = false;
    std::vector<int> S;  // empty unless is_graph
    bool involution = false;
    double antisymmetry_residual = 0.0;  // max |H(x,Sx) + H(Sx,x)|
    bool measure_preserving = false;
    bool pass = false;
};
InvolutionReport extract_involution(const Table& plan, const DiscreteMeasure& mu,
                                    const Hamiltonian& ham, double tol);

// Full rearrangement pipeline: pairwise monotonicity of graph(T), primal
// and dual solves, duality gap, involution extraction, and the diagonal
// checks that apply when T is c-monotone (diagonal plan optimal and
// T x in the second-slot c-subdifferential of H at (x,x)).
struct RearrangementResult {
    MonotoneCheck monotonicity;
    MkSymResult primal;
    DualCertificate dual;
    double gap;
    Hamiltonian ham;
    InvolutionReport involution;
    double diagonal_objective;  // sum_i mu_i * c(x_i, T x_i)
    bool diagonal_optimal;      // meaningful when monotonicity.ok
    std::vector<char> inclusion;  // per weighted point: T x in diag subdifferential
    bool inclusion_holds;
};
RearrangementResult monotone_rearrangement(const Coupling& c, const std::vector<int>& T,
                                           const DiscreteMeasure& mu, double tol = 1e-6,
                                           int max_iter = 10000);

}  // namespace ccx
