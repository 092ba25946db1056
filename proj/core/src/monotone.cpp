#include "ccx/monotone.hpp"

#include <algorithm>
#include <cmath>

#include "ccx/errors.hpp"

namespace ccx {

bool Relation::contains(int x, int y) const {
    return std::binary_search(pairs.begin(), pairs.end(), IndexPair{x, y});
}

Relation make_relation(std::vector<IndexPair> pairs) {
    if (pairs.empty()) throw InvalidInput("make_relation: relation must be nonempty");
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw InvalidInput("make_relation: duplicate pairs");
    for (auto [x, y] : pairs)
        if (x < 0 || y < 0) throw InvalidInput("make_relation: negative index");
    return Relation{std::move(pairs)};
}

Relation graph_of_map(const std::vector<int>& T) {
    std::vector<IndexPair> pairs;
    pairs.reserve(T.size());
    for (int i = 0; i < static_cast<int>(T.size()); ++i)
        pairs.emplace_back(i, T[static_cast<std::size_t>(i)]);
    return make_relation(std::move(pairs));
}

double pair_margin(const Coupling& c, int x1, int y1, int x2, int y2) {
    return c.at(x1, y1) + c.at(x2, y2) - c.at(x1, y2) - c.at(x2, y1);
}

MonotoneCheck is_c_monotone(const Relation& M, const Coupling& c, double tol) {
    MonotoneCheck r;
    bool first = true;
    for (std::size_t a = 0; a < M.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < M.pairs.size(); ++b) {
            auto [x1, y1] = M.pairs[a];
            auto [x2, y2] = M.pairs[b];
            double m = pair_margin(c, x1, y1, x2, y2);
            if (first || m < r.worst) r.worst = m;
            first = false;
            if (m < -tol && !r.witness) {
                r.ok = false;
                r.witness = std::array<int, 4>{x1, y1, x2, y2};
            }
        }
    return r;
}

namespace {

void guard_cycle_enumeration(int size, int n) {
    if (n < 2 || n > 5)
        throw ResourceLimit("cyclic monotonicity: order must be between 2 and 5");
    int cap = 0;
    switch (n) {
        case 2: cap = 700; break;
        case 3: cap = 40; break;
        case 4: cap = 20; break;
        case 5: cap = 14; break;
    }
    if (size > cap)
        throw ResourceLimit("cyclic monotonicity: relation too large for order " +
                            std::to_string(n) + " enumeration (cap " +
                            std::to_string(cap) + ")");
}

// Iterate all index tuples of length n over [0, size) in lexicographic order,
// calling visit(tuple); visit returns false to stop the enumeration.
template <typename Visit>
void for_each_tuple(int size, int n, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        if (!visit(idx)) return;
        int k = n - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == size - 1) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) return;
        ++idx[static_cast<std::size_t>(k)];
    }
}

}  // namespace

CyclicCheck is_c_cyclically_monotone(const Relation& M, const Coupling& c, int n,
                                     double tol) {
    guard_cycle_enumeration(M.size(), n);
    CyclicCheck r;
    bool first = true;
    for_each_tuple(M.size(), n, [&](const std::vector<int>& idx) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            auto [xi, yi] = M.pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            auto [xn, yn] =
                M.pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>((i + 1) % n)])];
            (void)yn;
            sum += c.at(xi, yi) - c.at(xn, yi);
        }
        if (first || sum < r.worst_cycle_sum) r.worst_cycle_sum = sum;
        first = false;
        if (sum < -tol && !r.witness_cycle) {
            r.ok = false;
            std::vector<IndexPair> cyc;
            for (int i = 0; i < n; ++i)
                cyc.push_back(M.pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
            r.witness_cycle = std::move(cyc);
        }
        return true;
    });
    return r;
}

MaximalityCheck is_maximal_c_monotone(const Relation& M, const Coupling& c, double tol) {
    MaximalityCheck r;
    for (int x = 0; x < c.nx(); ++x)
        for (int y = 0; y < c.ny(); ++y) {
            if (M.contains(x, y)) continue;
            bool admissible = true;
            for (auto [a, b] : M.pairs)
                if (pair_margin(c, x, y, a, b) < -tol) {
                    admissible = false;
                    break;
                }
            if (admissible) {
                r.maximal = false;
                r.admissible_extensions.emplace_back(x, y);
            }
        }
    return r;
}

Enlargement enlarge(const Relation& M) {
    if (M.pairs.empty()) throw InvalidInput("enlarge: relation must be nonempty");
    Enlargement e;
    e.source = M;
    e.pairs.reserve(M.pairs.size());
    for (auto [x, y] : M.pairs) e.pairs.emplace_back(UPoint{x, y}, VPoint{y, x});
    return e;
}

EnlargementEquivalenceReport check_enlargement_equivalence(const Relation& M,
                                                           const Coupling& c, int n_max,
                                                           double tol) {
    if (n_max < 2 || n_max > 5)
        throw ResourceLimit("check_enlargement_equivalence: order range must lie in [2,5]");
    guard_cycle_enumeration(M.size(), n_max);

    EnlargementEquivalenceReport rep;
    rep.m_monotone = is_c_monotone(M, c, tol).ok;

    Enlargement E = enlarge(M);
    SymmetrizedCoupling sc{c};

    bool all_lifted = true;
    for (int n = 2; n <= n_max; ++n) {
        bool ok = true;
        for_each_tuple(E.size(), n, [&](const std::vector<int>& idx) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                const auto& [ui, vi] = E.pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                const auto& [un, vn] =
                    E.pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>((i + 1) % n)])];
                (void)vn;
                sum += sc.eval(ui, vi) - sc.eval(un, vi);
            }
            if (sum < -tol) {
                ok = false;
                return false;
            }
            return true;
        });
        rep.lifted_cyclic_by_order.emplace_back(n, ok);
        all_lifted = all_lifted && ok;
    }
    rep.equivalent = (rep.m_monotone == all_lifted);

    // Order-2 identity: the lifted two-member cycle sum equals exactly twice
    // the pairwise compatibility margin.
    double worst = 0.0;
    for (std::size_t a = 0; a < E.pairs.size(); ++a)
        for (std::size_t b = 0; b < E.pairs.size(); ++b) {
            const auto& [ua, va] = E.pairs[a];
            const auto& [ub, vb] = E.pairs[b];
            double cycle2 = sc.eval(ua, va) - sc.eval(ub, va) + sc.eval(ub, vb) - sc.eval(ua, vb);
            double margin = pair_margin(c, ua.x, ua.y, ub.x, ub.y);
            worst = std::max(worst, std::abs(cycle2 - 2.0 * margin));
        }
    rep.order2_identity_residual = worst;
    return rep;
}

}  // namespace ccx
