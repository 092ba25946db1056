#pragma once

#include <vector>

#include "ccx/ctransform.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "ccx/table.hpp"

namespace ccx {

// A discrete connecting curve between two indices of one space: a node path
// from a to b with strictly increasing parameter values t in [0,1].
struct Curve {
    int a = 0, b = 0;
    std::vector<int> path;  // path.front() == a, path.back() == b
    std::vector<double> t;  // t.front() == 0, t.back() == 1
};

// A family of curves indexed by endpoint pairs. Several curves may share the
// same endpoints; they then count as alternative connections.
struct CurveFamily {
    std::vector<Curve> curves;
};

Curve make_curve(int a, int b, std::vector<int> path, std::vector<double> t);

// A candidate adjoint map X -> Y, checked (not assumed) to be c-skew.
struct SkewMap {
    std::vector<int> B;
};

// Skewness: c(x1,Bx1) + c(x2,Bx2) = c(x1,Bx2) + c(x2,Bx1) for all pairs.
struct SkewCheck {
    bool ok = false;
    double residual = 0.0;  // max absolute defect over pairs
};
SkewCheck is_c_skew(const SkewMap& B, const Coupling& c, double tol = 1e-9);

// Minimize I_p(x) = L(x,p) - c(x,p) over the finite X. For selfdual L this
// is nonnegative, and it vanishes exactly where (x,p) lies on the graph.
struct IpMinimization {
    double min_value = 0.0;
    std::vector<int> argmin;      // { x : I_p(x) <= min + tol }
    std::vector<double> values;   // I_p per point
    bool attained = false;        // min <= tol
};
IpMinimization minimize_Ip(const Lagrangian& L, int p, double tol = 1e-9);

// Saddle computation for G(x,z) = H(z,x) + c(z,Bz) - c(x,Bz) over X x X.
// For antisymmetric H and c-skew B both iterated optima collapse onto
// I(x) = L_H(x,Bx) - c(x,Bx): inf-sup equals min I and sup-inf equals
// -min I. The gap is always nonnegative (weak duality); it closes only
// under convexity hypotheses, which the caller asserts per fixture.
struct MinimaxReport {
    double inf_sup = 0.0;
    double sup_inf = 0.0;
    double gap = 0.0;
    std::vector<double> i_values;        // I per point
    double chain_inf_residual = 0.0;     // |inf_sup - min I|
    double chain_sup_residual = 0.0;     // |sup_inf + min I|
    double antisymmetry_residual = 0.0;  // max |H(x,z) + H(z,x)|
};
// H is a raw table on X x X; non-antisymmetric H (beyond tol) is rejected
// with InvalidInput.
MinimaxReport minimax_gap(const Table& H, const SkewMap& B, const Coupling& c,
                          double tol = 1e-9);

// Variational inversion through a skew map: minimize
// J(x) = phi(x) + phi^c(Bx) - c(x,Bx), which is nonnegative by the Young
// inequality. Each argmin with J <= tol solves Bx in the c-subdifferential
// of phi at x; that inclusion is re-verified directly.
struct SkewInversionReport {
    double min_value = 0.0;
    std::vector<int> argmin;
    std::vector<double> values;
    bool attained = false;          // min <= tol
    bool inclusion_verified = false;  // every argmin passes the subdifferential test
    double skew_residual = 0.0;
};
SkewInversionReport invert_via_skew(const ValueTable& phi, const SkewMap& B,
                                    const Coupling& c, double tol = 1e-9);

// Chord test along a curve family: convexity of one variable of F with the
// other frozen. With uniform = true a single curve must serve every frozen
// index; otherwise each frozen index may pick its own curve among the
// alternatives for a pair. Reports the worst chord violation and where it
// happens.
enum class CurveVariable { first, second };

struct ArcwiseReport {
    bool ok = false;
    double worst_violation = 0.0;  // max over scanned nodes of F(node) - chord
    bool has_witness = false;
    int witness_a = -1, witness_b = -1;  // endpoint pair of the violating curve
    int witness_node = -1;               // path node where the chord fails most
    int witness_frozen = -1;             // frozen index of the other variable
};
ArcwiseReport check_arcwise_convexity(const Table& F, const CurveFamily& curves,
                                      CurveVariable variable, bool uniform, double tol);

// The slope criterion for c-convexity: if for all x,z
//   sup_y { c(x,y) - c(z,y) } >= phi(x) - phi(z),
// then phi is c-convex. Also exercises the underlying saddle identity for
// F_x(z,y) = c(x,y) - c(z,y) + phi(z): the sup-inf chain equals the double
// conjugate of phi definitionally, and under the hypothesis the inf-sup
// chain pins it to phi itself. The curve family feeds the companion
// arc-wise hypothesis on (x,y) -> phi(x) - c(x,y) in the first variable.
struct CconvexityCriterionReport {
    bool arcwise_hypothesis = false;  // phi(x) - c(x,y) chord-convex in x
    double arcwise_violation = 0.0;
    bool slope_hypothesis = false;  // the displayed inequality, all pairs
    double slope_margin = 0.0;      // min over pairs of lhs - rhs
    bool phi_is_c_convex = false;
    double c_convexity_residual = 0.0;   // max |phi^cc - phi|
    double chain_identity_residual = 0.0;  // max_x |sup_y inf_z F_x - phi^cc(x)|
    double max_minimax_gap = 0.0;          // max_x (inf_z sup_y - sup_y inf_z)
    bool implication_holds = false;        // hypotheses imply c-convexity here
};
CconvexityCriterionReport check_cconvexity_criterion(const ValueTable& phi, const Coupling& c,
                                                     const CurveFamily& curves, double tol);

}  // namespace ccx
