#include "ccx/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "ccx/ctransform.hpp"
#include "ccx/errors.hpp"

namespace ccx {
namespace {

void validate_map(const Coupling& c, const std::vector<int>& T) {
    if (static_cast<int>(T.size()) != c.nx())
        throw InvalidInput("transport: map is not total on X");
    for (int y : T)
        if (y < 0 || y >= c.ny()) throw InvalidInput("transport: map value out of range");
}

void validate_measure(const Coupling& c, const DiscreteMeasure& mu) {
    if (mu.size() != c.nx()) throw InvalidInput("transport: measure lives on the wrong space");
    if (mu.size() > 500)
        throw ResourceLimit("transport: dense solves are capped at 500 points");
}

}  // namespace

double DiscreteMeasure::max_weight() const {
    double m = 0.0;
    for (double w : weights) m = std::max(m, w);
    return m;
}

DiscreteMeasure make_measure(FiniteSpace space, std::vector<double> weights) {
    if (static_cast<int>(weights.size()) != space.size())
        throw InvalidInput("make_measure: weight count mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InvalidInput("make_measure: bad weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidInput("make_measure: weights must sum to 1");
    return DiscreteMeasure{std::move(space), std::move(weights)};
}

DiscreteMeasure uniform_measure(FiniteSpace space) {
    const int n = space.size();
    if (n <= 0) throw InvalidInput("uniform_measure: empty space");
    std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
    return DiscreteMeasure{std::move(space), std::move(w)};
}

Table symmetrized_cost(const Coupling& c, const std::vector<int>& T) {
    validate_map(c, T);
    const int n = c.nx();
    Table chat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            chat.at(i, j) =
                0.5 * (c.at(i, T[static_cast<std::size_t>(j)]) + c.at(j, T[static_cast<std::size_t>(i)]));
    return chat;
}

MkSymResult solve_mk_sym(const Coupling& c, const std::vector<int>& T,
                         const DiscreteMeasure& mu) {
    validate_map(c, T);
    validate_measure(c, mu);
    MkSymResult res;
    res.chat = symmetrized_cost(c, T);
    res.lp = solve_transportation_max(res.chat, mu.weights, mu.weights);
    const int n = c.nx();
    res.plan = Table(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            res.plan.at(i, j) = 0.5 * (res.lp.plan.at(i, j) + res.lp.plan.at(j, i));
    res.value = res.lp.value;
    res.value_exact = res.lp.value_exact;
    return res;
}

DualCertificate solve_dk_sym(const Coupling& c, const std::vector<int>& T,
                             const DiscreteMeasure& mu, double tol, int max_iter) {
    validate_map(c, T);
    validate_measure(c, mu);
    const int nx = c.nx(), ny = c.ny();

    Table chat = symmetrized_cost(c, T);
    LpResult lp = solve_transportation_max(chat, mu.weights, mu.weights);

    // Atom potentials psi_i = 2 u_i are feasible against the doubled cost on
    // the atom pairs; one conjugation pass extends them to the full product
    // without changing the dual objective.
    Table phi(ny, nx);
    for (int y = 0; y < ny; ++y)
        for (int x2 = 0; x2 < nx; ++x2) {
            double best = -kPlusInfinity;
            for (int i = 0; i < nx; ++i) {
                double cand = c.at(i, y) + c.at(x2, T[static_cast<std::size_t>(i)]) -
                              2.0 * lp.dual_u[static_cast<std::size_t>(i)];
                best = std::max(best, cand);
            }
            phi.at(y, x2) = best;
        }
    Table psi = symmetrized_conjugate_to_u(c, phi);

    SymmetrizedCoupling sc{c};
    SynthesisResult syn = synthesize_selfdual(psi, phi, sc, tol, max_iter);

    DualCertificate cert;
    cert.psi = std::move(psi);
    cert.phi = std::move(phi);
    cert.selfdual = syn.lagrangian;
    cert.iterations = syn.iterations;
    double obj = 0.0;
    for (int i = 0; i < nx; ++i)
        obj += mu.weights[static_cast<std::size_t>(i)] *
               cert.selfdual.at(i, T[static_cast<std::size_t>(i)]);
    cert.objective = obj;
    return cert;
}

bool verify_duality(double plan_value, const DualCertificate& certificate, double tol) {
    return std::abs(plan_value - certificate.objective) <= tol;
}

LpResult solve_lifted_mk(const Coupling& c, const std::vector<int>& T,
                         const DiscreteMeasure& mu) {
    validate_map(c, T);
    validate_measure(c, mu);
    const int n = c.nx();
    SymmetrizedCoupling sc{c};
    Table lifted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lifted.at(i, j) = sc.eval(UPoint{i, T[static_cast<std::size_t>(i)]},
                                      VPoint{T[static_cast<std::size_t>(j)], j});
    return solve_transportation_max(lifted, mu.weights, mu.weights);
}

SupportInclusionReport extract_support_inclusion(const Table& plan, const Lagrangian& L,
                                                 const std::vector<int>& T, double tol) {
    const Coupling& c = L.coupling;
    validate_map(c, T);
    const int n = c.nx();
    if (plan.rows() != n || plan.cols() != n)
        throw InvalidInput("extract_support_inclusion: plan shape mismatch");

    Hamiltonian ham = hamiltonian_of(L);
    SupportInclusionReport rep;
    rep.max_equality_residual = 0.0;
    rep.plan_integral_H = 0.0;
    rep.support_size = 0;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            rep.plan_integral_H += ham.H.at(x, z) * plan.at(x, z);
            if (plan.at(x, z) > tol) {
                ++rep.support_size;
                double r = std::abs(c.at(z, T[static_cast<std::size_t>(x)]) - ham.H.at(x, z) -
                                    L.at(x, T[static_cast<std::size_t>(x)]));
                if (r > tol)
                    throw CertificateMismatch(
                        "support equality violated at plan cell (" + std::to_string(x) + "," +
                        std::to_string(z) + "): residual " + std::to_string(r));
                rep.max_equality_residual = std::max(rep.max_equality_residual, r);
            }
        }
    rep.pass = rep.max_equality_residual <= tol && std::abs(rep.plan_integral_H) <= tol;
    return rep;
}

InvolutionReport extract_involution(const Table& plan, const DiscreteMeasure& mu,
                                    const Hamiltonian& ham, double tol) {
    const int n = plan.rows();
    if (plan.cols() != n || mu.size() != n || ham.H.rows() != n)
        throw InvalidInput("extract_involution: shape mismatch");
    const double threshold = 1e-9 * mu.max_weight();

    InvolutionReport rep;
    std::vector<int> S(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (plan.at(i, j) > threshold) {
                if (S[static_cast<std::size_t>(i)] != -1) return rep;  // row holds two atoms
                S[static_cast<std::size_t>(i)] = j;
            }
    // Zero-mass rows carry no constraint; close them with the identity.
    for (int i = 0; i < n; ++i)
        if (S[static_cast<std::size_t>(i)] == -1) S[static_cast<std::size_t>(i)] = i;

    rep.is_graph = true;
    rep.S = S;
    rep.involution = true;
    for (int i = 0; i < n; ++i)
        if (S[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])] != i) rep.involution = false;
    for (int i = 0; i < n; ++i) {
        int s = S[static_cast<std::size_t>(i)];
        rep.antisymmetry_residual =
            std::max(rep.antisymmetry_residual, std::abs(ham.H.at(i, s) + ham.H.at(s, i)));
    }
    rep.measure_preserving = true;
    std::vector<double> pushed(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        pushed[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])] +=
            mu.weights[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
        if (std::abs(pushed[static_cast<std::size_t>(j)] - mu.weights[static_cast<std::size_t>(j)]) >
            1e-12)
            rep.measure_preserving = false;
    rep.pass = rep.involution && rep.antisymmetry_residual <= tol && rep.measure_preserving;
    return rep;
}

RearrangementResult monotone_rearrangement(const Coupling& c, const std::vector<int>& T,
                                           const DiscreteMeasure& mu, double tol,
                                           int max_iter) {
    validate_map(c, T);
    validate_measure(c, mu);
    RearrangementResult r;
    r.monotonicity = is_c_monotone(graph_of_map(T), c, tol);
    r.primal = solve_mk_sym(c, T, mu);
    r.dual = solve_dk_sym(c, T, mu, std::min(tol, 1e-9), max_iter);
    r.gap = std::abs(r.primal.value - r.dual.objective);
    r.ham = hamiltonian_of(r.dual.selfdual);
    r.involution = extract_involution(r.primal.plan, mu, r.ham, tol);

    const int n = c.nx();
    r.diagonal_objective = 0.0;
    for (int i = 0; i < n; ++i)
        r.diagonal_objective += mu.weights[static_cast<std::size_t>(i)] * r.primal.chat.at(i, i);
    r.diagonal_optimal =
        r.monotonicity.ok && std::abs(r.diagonal_objective - r.primal.value) <= tol;

    r.inclusion.assign(static_cast<std::size_t>(n), 1);
    r.inclusion_holds = true;
    for (int x = 0; x < n; ++x) {
        if (mu.weights[static_cast<std::size_t>(x)] <= 0.0) continue;
        std::vector<int> sub = partial_c_subdiff_2(r.ham, x, x, tol);
        bool member = std::find(sub.begin(), sub.end(), T[static_cast<std::size_t>(x)]) != sub.end();
        r.inclusion[static_cast<std::size_t>(x)] = member ? 1 : 0;
        if (!member) r.inclusion_holds = false;
    }
    return r;
}

}  // namespace ccx
