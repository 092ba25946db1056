#include "ccx/selfdual.hpp"

#include <algorithm>
#include <cmath>

#include "ccx/errors.hpp"

namespace ccx {

Table symmetrized_conjugate_to_v(const Coupling& c, const Table& G) {
    const int nx = c.nx(), ny = c.ny();
    if (G.rows() != nx || G.cols() != ny)
        throw InvalidInput("symmetrized_conjugate_to_v: table shape mismatch");
    if (!G.is_proper())
        throw InvalidInput("symmetrized_conjugate_to_v: table has no finite entry");
    // P(y, y1) = max_x1 { c(x1, y) - G(x1, y1) }
    Table P(ny, ny, -kPlusInfinity);
    for (int y = 0; y < ny; ++y)
        for (int y1 = 0; y1 < ny; ++y1) {
            double best = -kPlusInfinity;
            for (int x1 = 0; x1 < nx; ++x1) {
                double g = G.at(x1, y1);
                if (!std::isfinite(g)) continue;
                best = std::max(best, c.at(x1, y) - g);
            }
            P.at(y, y1) = best;
        }
    // out(y, x) = max_y1 { c(x, y1) + P(y, y1) }
    Table out(ny, nx, -kPlusInfinity);
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            double best = -kPlusInfinity;
            for (int y1 = 0; y1 < ny; ++y1) {
                double p = P.at(y, y1);
                if (!std::isfinite(p)) continue;
                best = std::max(best, c.at(x, y1) + p);
            }
            out.at(y, x) = best;
        }
    return out;
}

Table symmetrized_conjugate_to_u(const Coupling& c, const Table& Phi) {
    const int nx = c.nx(), ny = c.ny();
    if (Phi.rows() != ny || Phi.cols() != nx)
        throw InvalidInput("symmetrized_conjugate_to_u: table shape mismatch");
    if (!Phi.is_proper())
        throw InvalidInput("symmetrized_conjugate_to_u: table has no finite entry");
    // S(x, x1) = max_y1 { c(x, y1) - Phi(y1, x1) }
    Table S(nx, nx, -kPlusInfinity);
    for (int x = 0; x < nx; ++x)
        for (int x1 = 0; x1 < nx; ++x1) {
            double best = -kPlusInfinity;
            for (int y1 = 0; y1 < ny; ++y1) {
                double p = Phi.at(y1, x1);
                if (!std::isfinite(p)) continue;
                best = std::max(best, c.at(x, y1) - p);
            }
            S.at(x, x1) = best;
        }
    // out(x, y) = max_x1 { c(x1, y) + S(x, x1) }
    Table out(nx, ny, -kPlusInfinity);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            double best = -kPlusInfinity;
            for (int x1 = 0; x1 < nx; ++x1) {
                double s = S.at(x, x1);
                if (!std::isfinite(s)) continue;
                best = std::max(best, c.at(x1, y) + s);
            }
            out.at(x, y) = best;
        }
    return out;
}

Table C_conjugate_lagrangian(const Lagrangian& L) {
    return symmetrized_conjugate_to_v(L.coupling, L.table);
}

SelfdualCheck is_selfdual(const Lagrangian& L, double tol) {
    Table LC = C_conjugate_lagrangian(L);
    double residual = 0.0;
    for (int i = 0; i < L.table.rows(); ++i)
        for (int j = 0; j < L.table.cols(); ++j) {
            double a = LC.at(j, i), b = L.table.at(i, j);
            if (std::isinf(a) && std::isinf(b) && a == b) continue;
            residual = std::max(residual, std::abs(a - b));
        }
    return SelfdualCheck{residual <= tol, residual};
}

FitzpatrickFunction fitzpatrick(const Relation& M, const Coupling& c) {
    if (M.pairs.empty()) throw InvalidInput("fitzpatrick: relation must be nonempty");
    FitzpatrickFunction f;
    f.relation = M;
    f.coupling = c;
    f.F = Table(c.nx(), c.ny(), -kPlusInfinity);
    for (int i = 0; i < c.nx(); ++i)
        for (int j = 0; j < c.ny(); ++j) {
            double best = -kPlusInfinity;
            for (auto [a, b] : M.pairs)
                best = std::max(best, c.at(i, b) + c.at(a, j) - c.at(a, b));
            f.F.at(i, j) = best;
        }
    f.Fc = symmetrized_conjugate_to_v(c, f.F);
    return f;
}

Table selfdual_reflection(const Coupling& c, const Table& L) {
    // max_v { C(u,v) - L(swap v) }: reading L at the swapped v-point means
    // conjugating the transposed table back onto X x Y.
    return symmetrized_conjugate_to_u(c, transpose(L));
}

SynthesisResult synthesize_selfdual(const Table& psi, const Table& phi,
                                    const SymmetrizedCoupling& sc, double tol,
                                    int max_iter) {
    const Coupling& c = sc.base;
    const int nx = c.nx(), ny = c.ny();
    if (psi.rows() != nx || psi.cols() != ny)
        throw InvalidInput("synthesize_selfdual: psi shape mismatch");
    if (phi.rows() != ny || phi.cols() != nx)
        throw InvalidInput("synthesize_selfdual: phi shape mismatch");

    // Feasibility psi(u) + phi(v) >= C(u,v) for all u, v, verified through
    // the equivalent pointwise bound conj(phi) <= psi.
    Table phi_conj = symmetrized_conjugate_to_u(c, phi);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (phi_conj.at(i, j) > psi.at(i, j) + tol)
                throw InvalidInput(
                    "synthesize_selfdual: psi + phi does not dominate the symmetrized cost");

    // Averaged initializer between the bounds.
    Table Phi(ny, nx);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) Phi.at(j, i) = 0.5 * (phi.at(j, i) + psi.at(i, j));
    Table PhiC = symmetrized_conjugate_to_u(c, Phi);
    Table L(nx, ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) L.at(i, j) = 0.5 * (PhiC.at(i, j) + Phi.at(j, i));

    SynthesisResult result;
    for (int k = 0; k < max_iter; ++k) {
        Table refl = selfdual_reflection(c, L);
        double step = 0.0;
        for (std::size_t t = 0; t < L.data().size(); ++t) {
            double next = 0.5 * (L.data()[t] + refl.data()[t]);
            step = std::max(step, std::abs(next - L.data()[t]));
            L.data()[t] = next;
        }
        result.step_history.push_back(step);
        result.final_step = step;
        // The averaging step moves by half the reflection defect, so the
        // defect itself is within tol once the step is within tol/2. Passes
        // that no longer move the table beyond that are not counted as
        // iterations (an already-selfdual input converges in 0).
        if (step <= tol / 2.0) {
            result.iterations = k;
            break;
        }
        result.iterations = k + 1;
        if (k + 1 == max_iter)
            throw NonConvergence("synthesize_selfdual: iteration budget exhausted",
                                 2.0 * step);
    }

    Lagrangian out{c, std::move(L)};
    out.selfdual_residual = is_selfdual(out, tol).residual;
    result.lagrangian = std::move(out);
    return result;
}

DbarGraph graph_of_dbar(const Lagrangian& L, double tol) {
    double residual = L.selfdual_residual;
    if (std::isnan(residual)) residual = is_selfdual(L, tol).residual;
    if (residual > tol)
        throw InvalidInput("graph_of_dbar: Lagrangian is not selfdual within tolerance");
    DbarGraph g;
    for (int i = 0; i < L.table.rows(); ++i) {
        bool any = false;
        for (int j = 0; j < L.table.cols(); ++j)
            if (L.table.at(i, j) - L.coupling.at(i, j) <= tol) {
                g.pairs.emplace_back(i, j);
                any = true;
            }
        if (any) g.domain.push_back(i);
    }
    return g;
}

}  // namespace ccx
