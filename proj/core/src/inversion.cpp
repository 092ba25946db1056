#include "ccx/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "ccx/errors.hpp"

namespace ccx {
namespace {

void validate_total_map(const std::vector<int>& B, int domain, int range,
                        const char* who) {
    if (static_cast<int>(B.size()) != domain)
        throw InvalidInput(std::string(who) + ": map is not total");
    for (int y : B)
        if (y < 0 || y >= range) throw InvalidInput(std::string(who) + ": map value out of range");
}

}  // namespace

Curve make_curve(int a, int b, std::vector<int> path, std::vector<double> t) {
    if (path.empty() || path.size() != t.size())
        throw InvalidInput("make_curve: path and parameter lengths differ");
    if (path.front() != a || path.back() != b)
        throw InvalidInput("make_curve: endpoints do not match the path");
    if (t.front() != 0.0 || t.back() != 1.0)
        throw InvalidInput("make_curve: parameter must run from 0 to 1");
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (!(t[k] < t[k + 1])) throw InvalidInput("make_curve: parameter must increase strictly");
    for (int node : path)
        if (node < 0) throw InvalidInput("make_curve: negative node index");
    Curve c;
    c.a = a;
    c.b = b;
    c.path = std::move(path);
    c.t = std::move(t);
    return c;
}

SkewCheck is_c_skew(const SkewMap& B, const Coupling& c, double tol) {
    validate_total_map(B.B, c.nx(), c.ny(), "is_c_skew");
    const int n = c.nx();
    SkewCheck check;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1 + 1; x2 < n; ++x2) {
            int y1 = B.B[static_cast<std::size_t>(x1)], y2 = B.B[static_cast<std::size_t>(x2)];
            double defect =
                std::abs(c.at(x1, y1) + c.at(x2, y2) - c.at(x1, y2) - c.at(x2, y1));
            check.residual = std::max(check.residual, defect);
        }
    check.ok = check.residual <= tol;
    return check;
}

IpMinimization minimize_Ip(const Lagrangian& L, int p, double tol) {
    const Coupling& c = L.coupling;
    if (p < 0 || p >= c.ny()) throw InvalidInput("minimize_Ip: target index out of range");
    const int n = c.nx();
    IpMinimization out;
    out.values.resize(static_cast<std::size_t>(n));
    double best = kPlusInfinity;
    for (int x = 0; x < n; ++x) {
        double v = L.at(x, p) - c.at(x, p);
        out.values[static_cast<std::size_t>(x)] = v;
        best = std::min(best, v);
    }
    out.min_value = best;
    for (int x = 0; x < n; ++x)
        if (out.values[static_cast<std::size_t>(x)] <= best + tol) out.argmin.push_back(x);
    out.attained = best <= tol;
    return out;
}

MinimaxReport minimax_gap(const Table& H, const SkewMap& B, const Coupling& c, double tol) {
    const int n = c.nx();
    if (H.rows() != n || H.cols() != n) throw InvalidInput("minimax_gap: table shape mismatch");
    validate_total_map(B.B, n, c.ny(), "minimax_gap");

    MinimaxReport rep;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            rep.antisymmetry_residual =
                std::max(rep.antisymmetry_residual, std::abs(H.at(x, z) + H.at(z, x)));
    if (rep.antisymmetry_residual > tol)
        throw InvalidInput("minimax_gap: table is not antisymmetric (residual " +
                           std::to_string(rep.antisymmetry_residual) + ")");

    // G(x,z) = H(z,x) + c(z,Bz) - c(x,Bz), associated so that the inner
    // optimization over x telescopes exactly against I.
    Table G(n, n);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int bz = B.B[static_cast<std::size_t>(z)];
            G.at(x, z) = c.at(z, bz) - (c.at(x, bz) - H.at(z, x));
        }

    double inf_sup = kPlusInfinity;
    for (int x = 0; x < n; ++x) {
        double row_sup = -kPlusInfinity;
        for (int z = 0; z < n; ++z) row_sup = std::max(row_sup, G.at(x, z));
        inf_sup = std::min(inf_sup, row_sup);
    }
    double sup_inf = -kPlusInfinity;
    for (int z = 0; z < n; ++z) {
        double col_inf = kPlusInfinity;
        for (int x = 0; x < n; ++x) col_inf = std::min(col_inf, G.at(x, z));
        sup_inf = std::max(sup_inf, col_inf);
    }
    rep.inf_sup = inf_sup;
    rep.sup_inf = sup_inf;
    rep.gap = inf_sup - sup_inf;

    rep.i_values.resize(static_cast<std::size_t>(n));
    double min_i = kPlusInfinity;
    for (int x = 0; x < n; ++x) {
        int bx = B.B[static_cast<std::size_t>(x)];
        double lh = -kPlusInfinity;
        for (int z = 0; z < n; ++z) lh = std::max(lh, c.at(z, bx) - H.at(x, z));
        double i = lh - c.at(x, bx);
        rep.i_values[static_cast<std::size_t>(x)] = i;
        min_i = std::min(min_i, i);
    }
    rep.chain_inf_residual = std::abs(inf_sup - min_i);
    rep.chain_sup_residual = std::abs(sup_inf + min_i);
    return rep;
}

SkewInversionReport invert_via_skew(const ValueTable& phi, const SkewMap& B,
                                    const Coupling& c, double tol) {
    if (phi.size() != c.nx()) throw InvalidInput("invert_via_skew: potential size mismatch");
    SkewCheck skew = is_c_skew(B, c, tol);
    if (!skew.ok)
        throw InvalidInput("invert_via_skew: map is not c-skew (residual " +
                           std::to_string(skew.residual) + ")");

    ValueTable phic = c_conjugate(phi, c);
    const int n = c.nx();
    SkewInversionReport rep;
    rep.skew_residual = skew.residual;
    rep.values.resize(static_cast<std::size_t>(n));
    double best = kPlusInfinity;
    for (int x = 0; x < n; ++x) {
        int bx = B.B[static_cast<std::size_t>(x)];
        double j = phi.at(x) + phic.at(bx) - c.at(x, bx);
        rep.values[static_cast<std::size_t>(x)] = j;
        best = std::min(best, j);
    }
    rep.min_value = best;
    for (int x = 0; x < n; ++x)
        if (rep.values[static_cast<std::size_t>(x)] <= best + tol) rep.argmin.push_back(x);
    rep.attained = best <= tol;
    if (rep.attained) {
        rep.inclusion_verified = true;
        for (int x : rep.argmin) {
            std::vector<int> sub = c_subdifferential(phi, c, x, tol);
            if (std::find(sub.begin(), sub.end(), B.B[static_cast<std::size_t>(x)]) == sub.end())
                rep.inclusion_verified = false;
        }
    }
    return rep;
}

ArcwiseReport check_arcwise_convexity(const Table& F, const CurveFamily& curves,
                                      CurveVariable variable, bool uniform, double tol) {
    const int along = variable == CurveVariable::second ? F.cols() : F.rows();
    const int frozen_count = variable == CurveVariable::second ? F.rows() : F.cols();
    auto value = [&](int frozen, int node) {
        return variable == CurveVariable::second ? F.at(frozen, node) : F.at(node, frozen);
    };

    // Group alternative curves by unordered endpoint pair, preserving order.
    std::map<std::pair<int, int>, std::vector<const Curve*>> by_pair;
    for (const Curve& cur : curves.curves) {
        if (cur.a < 0 || cur.a >= along || cur.b < 0 || cur.b >= along)
            throw InvalidInput("check_arcwise_convexity: curve endpoint out of range");
        for (int node : cur.path)
            if (node >= along) throw InvalidInput("check_arcwise_convexity: path node out of range");
        if (cur.a == cur.b) continue;
        by_pair[{std::min(cur.a, cur.b), std::max(cur.a, cur.b)}].push_back(&cur);
    }
    for (int a = 0; a < along; ++a)
        for (int b = a + 1; b < along; ++b)
            if (by_pair.find({a, b}) == by_pair.end())
                throw InvalidInput("check_arcwise_convexity: no curve joins " +
                                   std::to_string(a) + " and " + std::to_string(b));

    struct Worst {
        double violation = -kPlusInfinity;
        int node = -1;
    };
    // Chord defect of one curve for one frozen index: max over interior
    // nodes of F(node) - [(1-t) F(a) + t F(b)].
    auto curve_worst = [&](const Curve& cur, int frozen) {
        Worst w;
        double fa = value(frozen, cur.a), fb = value(frozen, cur.b);
        for (std::size_t k = 1; k + 1 < cur.path.size(); ++k) {
            double chord = (1.0 - cur.t[k]) * fa + cur.t[k] * fb;
            double defect = value(frozen, cur.path[k]) - chord;
            if (defect > w.violation) {
                w.violation = defect;
                w.node = cur.path[k];
            }
        }
        if (w.node < 0) {  // no interior nodes: the chord holds trivially
            w.violation = 0.0;
            w.node = cur.a;
        }
        return w;
    };

    ArcwiseReport rep;
    rep.worst_violation = -kPlusInfinity;
    auto consider = [&](double violation, int a, int b, int node, int frozen) {
        if (violation > rep.worst_violation) {
            rep.worst_violation = violation;
            rep.witness_a = a;
            rep.witness_b = b;
            rep.witness_node = node;
            rep.witness_frozen = frozen;
        }
    };

    for (const auto& [pair, candidates] : by_pair) {
        if (uniform) {
            // One curve must serve every frozen index; take the best curve.
            double best = kPlusInfinity;
            Worst best_w;
            int best_frozen = -1;
            for (const Curve* cur : candidates) {
                double cand = -kPlusInfinity;
                Worst cand_w;
                int cand_frozen = -1;
                for (int f = 0; f < frozen_count; ++f) {
                    Worst w = curve_worst(*cur, f);
                    if (w.violation > cand) {
                        cand = w.violation;
                        cand_w = w;
                        cand_frozen = f;
                    }
                }
                if (cand < best) {
                    best = cand;
                    best_w = cand_w;
                    best_frozen = cand_frozen;
                }
            }
            consider(best, pair.first, pair.second, best_w.node, best_frozen);
        } else {
            // Each frozen index may use its own curve.
            for (int f = 0; f < frozen_count; ++f) {
                double best = kPlusInfinity;
                Worst best_w;
                for (const Curve* cur : candidates) {
                    Worst w = curve_worst(*cur, f);
                    if (w.violation < best) {
                        best = w.violation;
                        best_w = w;
                    }
                }
                consider(best, pair.first, pair.second, best_w.node, f);
            }
        }
    }
    if (rep.worst_violation == -kPlusInfinity) rep.worst_violation = 0.0;
    rep.ok = rep.worst_violation <= tol;
    rep.has_witness = !rep.ok;
    if (rep.ok) {
        rep.witness_a = rep.witness_b = rep.witness_node = rep.witness_frozen = -1;
    }
    return rep;
}

CconvexityCriterionReport check_cconvexity_criterion(const ValueTable& phi, const Coupling& c,
                                                     const CurveFamily& curves, double tol) {
    if (phi.size() != c.nx()) throw InvalidInput("check_cconvexity_criterion: size mismatch");
    const int nx = c.nx(), ny = c.ny();
    CconvexityCriterionReport rep;

    // Companion hypothesis: phi(x) - c(x,y) is chord-convex in x, uniformly
    // over y, along the supplied curves.
    Table F1(nx, ny);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) F1.at(x, y) = phi.at(x) - c.at(x, y);
    ArcwiseReport arc = check_arcwise_convexity(F1, curves, CurveVariable::first, true, tol);
    rep.arcwise_hypothesis = arc.ok;
    rep.arcwise_violation = std::max(arc.worst_violation, 0.0);

    // Slope hypothesis: max_y { c(x,y) - c(z,y) } dominates phi(x) - phi(z).
    rep.slope_margin = kPlusInfinity;
    for (int x = 0; x < nx; ++x)
        for (int z = 0; z < nx; ++z) {
            if (x == z) continue;
            double px = phi.at(x), pz = phi.at(z);
            if (std::isinf(pz)) continue;      // right side is -inf: trivially satisfied
            if (std::isinf(px)) {              // unreachable level: hypothesis fails
                rep.slope_margin = -kPlusInfinity;
                continue;
            }
            double lhs = -kPlusInfinity;
            for (int y = 0; y < ny; ++y) lhs = std::max(lhs, c.at(x, y) - c.at(z, y));
            rep.slope_margin = std::min(rep.slope_margin, lhs - (px - pz));
        }
    if (rep.slope_margin == kPlusInfinity) rep.slope_margin = 0.0;
    rep.slope_hypothesis = rep.slope_margin >= -tol;

    ValueTable phicc = c_double_conjugate(phi, c);
    rep.c_convexity_residual = 0.0;
    for (int x = 0; x < nx; ++x) {
        double a = phicc.at(x), b = phi.at(x);
        if (std::isinf(a) && std::isinf(b) && a == b) continue;
        rep.c_convexity_residual = std::max(rep.c_convexity_residual, std::abs(a - b));
    }
    rep.phi_is_c_convex = rep.c_convexity_residual <= tol;

    // Saddle chains for F_x(z,y) = c(x,y) - c(z,y) + phi(z), associated so
    // the inner minimum reproduces the conjugation pass verbatim.
    rep.chain_identity_residual = 0.0;
    rep.max_minimax_gap = -kPlusInfinity;
    for (int x = 0; x < nx; ++x) {
        double sup_inf = -kPlusInfinity;
        for (int y = 0; y < ny; ++y) {
            double inner = kPlusInfinity;
            for (int z = 0; z < nx; ++z) {
                if (std::isinf(phi.at(z))) continue;
                inner = std::min(inner, c.at(x, y) - (c.at(z, y) - phi.at(z)));
            }
            sup_inf = std::max(sup_inf, inner);
        }
        double inf_sup = kPlusInfinity;
        for (int z = 0; z < nx; ++z) {
            if (std::isinf(phi.at(z))) continue;
            double row = -kPlusInfinity;
            for (int y = 0; y < ny; ++y)
                row = std::max(row, c.at(x, y) - (c.at(z, y) - phi.at(z)));
            inf_sup = std::min(inf_sup, row);
        }
        rep.chain_identity_residual =
            std::max(rep.chain_identity_residual, std::abs(sup_inf - phicc.at(x)));
        rep.max_minimax_gap = std::max(rep.max_minimax_gap, inf_sup - sup_inf);
    }
    if (rep.max_minimax_gap == -kPlusInfinity) rep.max_minimax_gap = 0.0;

    rep.implication_holds =
        !(rep.arcwise_hypothesis && rep.slope_hypothesis) || rep.phi_is_c_convex;
    return rep;
}

}  // namespace ccx
