#include "ccx/exact_lp.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "ccx/errors.hpp"

namespace ccx {
namespace {

using Rat = mpq_class;

struct Simplex {
    int m, n;
    std::vector<Rat> c;  // m*n cost entries, row-major
    std::vector<Rat> a;  // row supplies
    std::vector<Rat> b;  // column demands
    std::vector<Rat> x;  // current basic solution
    std::vector<char> basic;
    std::vector<Rat> u, v;  // potentials, valid after compute_duals

    Rat& cost(int i, int j) { return c[static_cast<std::size_t>(i) * n + j]; }
    Rat& mass(int i, int j) { return x[static_cast<std::size_t>(i) * n + j]; }
    char& in_basis(int i, int j) { return basic[static_cast<std::size_t>(i) * n + j]; }

    void northwest_corner() {
        x.assign(static_cast<std::size_t>(m) * n, Rat(0));
        basic.assign(static_cast<std::size_t>(m) * n, 0);
        std::vector<Rat> ar = a, br = b;
        int i = 0, j = 0;
        for (;;) {
            Rat t = std::min(ar[static_cast<std::size_t>(i)], br[static_cast<std::size_t>(j)]);
            mass(i, j) = t;
            in_basis(i, j) = 1;
            ar[static_cast<std::size_t>(i)] -= t;
            br[static_cast<std::size_t>(j)] -= t;
            if (i == m - 1 && j == n - 1) break;
            // Advance one coordinate per step so the basis stays a spanning
            // tree with exactly m + n - 1 cells (degenerate zeros included).
            if (ar[static_cast<std::size_t>(i)] == 0 && i < m - 1)
                ++i;
            else
                ++j;
        }
    }

    // Solve u_i + v_j = c_ij over the basis tree, rooted at row 0 with u_0 = 0.
    void compute_duals() {
        std::vector<std::vector<int>> row_adj(static_cast<std::size_t>(m)),
            col_adj(static_cast<std::size_t>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (in_basis(i, j)) {
                    row_adj[static_cast<std::size_t>(i)].push_back(j);
                    col_adj[static_cast<std::size_t>(j)].push_back(i);
                }
        u.assign(static_cast<std::size_t>(m), Rat(0));
        v.assign(static_cast<std::size_t>(n), Rat(0));
        std::vector<char> row_seen(static_cast<std::size_t>(m), 0),
            col_seen(static_cast<std::size_t>(n), 0);
        std::queue<int> q;  // rows are 0..m-1, columns are m..m+n-1
        row_seen[0] = 1;
        q.push(0);
        while (!q.empty()) {
            int node = q.front();
            q.pop();
            if (node < m) {
                int i = node;
                for (int j : row_adj[static_cast<std::size_t>(i)])
                    if (!col_seen[static_cast<std::size_t>(j)]) {
                        col_seen[static_cast<std::size_t>(j)] = 1;
                        v[static_cast<std::size_t>(j)] = cost(i, j) - u[static_cast<std::size_t>(i)];
                        q.push(m + j);
                    }
            } else {
                int j = node - m;
                for (int i : col_adj[static_cast<std::size_t>(j)])
                    if (!row_seen[static_cast<std::size_t>(i)]) {
                        row_seen[static_cast<std::size_t>(i)] = 1;
                        u[static_cast<std::size_t>(i)] = cost(i, j) - v[static_cast<std::size_t>(j)];
                        q.push(i);
                    }
            }
        }
        for (int i = 0; i < m; ++i)
            if (!row_seen[static_cast<std::size_t>(i)])
                throw SolverError("transportation basis is not a spanning tree");
        for (int j = 0; j < n; ++j)
            if (!col_seen[static_cast<std::size_t>(j)])
                throw SolverError("transportation basis is not a spanning tree");
    }

    // Tree path from row node ei to column node ej, as basis cells in order
    // starting from the edge incident to column ej.
    std::vector<std::pair<int, int>> cycle_path(int ei, int ej) {
        const int total = m + n;
        std::vector<int> parent(static_cast<std::size_t>(total), -1);
        std::vector<char> seen(static_cast<std::size_t>(total), 0);
        std::vector<std::vector<int>> row_adj(static_cast<std::size_t>(m)),
            col_adj(static_cast<std::size_t>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (in_basis(i, j)) {
                    row_adj[static_cast<std::size_t>(i)].push_back(j);
                    col_adj[static_cast<std::size_t>(j)].push_back(i);
                }
        std::queue<int> q;
        seen[static_cast<std::size_t>(ei)] = 1;
        q.push(ei);
        while (!q.empty()) {
            int node = q.front();
            q.pop();
            if (node == m + ej) break;
            if (node < m) {
                for (int j : row_adj[static_cast<std::size_t>(node)])
                    if (!seen[static_cast<std::size_t>(m + j)]) {
                        seen[static_cast<std::size_t>(m + j)] = 1;
                        parent[static_cast<std::size_t>(m + j)] = node;
                        q.push(m + j);
                    }
            } else {
                for (int i : col_adj[static_cast<std::size_t>(node - m)])
                    if (!seen[static_cast<std::size_t>(i)]) {
                        seen[static_cast<std::size_t>(i)] = 1;
                        parent[static_cast<std::size_t>(i)] = node;
                        q.push(i);
                    }
            }
        }
        if (!seen[static_cast<std::size_t>(m + ej)])
            throw SolverError("entering cell has no tree path");
        std::vector<std::pair<int, int>> path;
        int node = m + ej;
        while (node != ei) {
            int p = parent[static_cast<std::size_t>(node)];
            int i = node < m ? node : p;
            int j = node < m ? p - m : node - m;
            path.emplace_back(i, j);
            node = p;
        }
        return path;
    }

    void run() {
        northwest_corner();
        const long max_pivots = 20000L + 200L * (m + n) * (m + n);
        for (long iter = 0;; ++iter) {
            if (iter > max_pivots) throw SolverError("pivot budget exhausted");
            compute_duals();
            // Bland entering rule: first cell (row-major) with positive
            // reduced cost; none means optimal.
            int ei = -1, ej = -1;
            for (int i = 0; i < m && ei < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (!in_basis(i, j) &&
                        cost(i, j) - u[static_cast<std::size_t>(i)] -
                                v[static_cast<std::size_t>(j)] >
                            0) {
                        ei = i;
                        ej = j;
                        break;
                    }
            if (ei < 0) return;

            std::vector<std::pair<int, int>> path = cycle_path(ei, ej);
            // Signs alternate around the cycle: entering +, then the path
            // edge sharing column ej is -, and so on.
            Rat theta;
            bool have_theta = false;
            int li = -1, lj = -1;
            for (std::size_t k = 0; k < path.size(); k += 2) {
                const auto& [i, j] = path[k];
                const Rat& val = mass(i, j);
                bool better = !have_theta || val < theta ||
                              (val == theta &&
                               (static_cast<long>(i) * n + j) < (static_cast<long>(li) * n + lj));
                if (better) {
                    theta = val;
                    li = i;
                    lj = j;
                    have_theta = true;
                }
            }
            if (!have_theta) throw SolverError("pivot cycle has no leaving cell");
            mass(ei, ej) += theta;
            for (std::size_t k = 0; k < path.size(); ++k) {
                const auto& [i, j] = path[k];
                if (k % 2 == 0)
                    mass(i, j) -= theta;
                else
                    mass(i, j) += theta;
            }
            in_basis(ei, ej) = 1;
            in_basis(li, lj) = 0;
        }
    }
};

}  // namespace

LpResult solve_transportation_max(const Table& cost, const std::vector<double>& supply,
                                  const std::vector<double>& demand) {
    const int m = cost.rows(), n = cost.cols();
    if (m <= 0 || n <= 0) throw InvalidInput("transportation: empty cost matrix");
    if (static_cast<int>(supply.size()) != m || static_cast<int>(demand.size()) != n)
        throw InvalidInput("transportation: marginal size mismatch");
    if (!cost.all_finite()) throw InvalidInput("transportation: non-finite cost entry");
    for (double s : supply)
        if (!std::isfinite(s) || s < 0.0) throw InvalidInput("transportation: bad supply entry");
    for (double d : demand)
        if (!std::isfinite(d) || d < 0.0) throw InvalidInput("transportation: bad demand entry");

    Simplex sx;
    sx.m = m;
    sx.n = n;
    sx.c.resize(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) sx.cost(i, j) = Rat(cost.at(i, j));
    sx.a.reserve(static_cast<std::size_t>(m));
    sx.b.reserve(static_cast<std::size_t>(n));
    Rat total_a(0), total_b(0);
    for (double s : supply) {
        sx.a.emplace_back(s);
        total_a += sx.a.back();
    }
    for (double d : demand) {
        sx.b.emplace_back(d);
        total_b += sx.b.back();
    }
    if (total_a != total_b) throw InvalidInput("transportation: supply and demand totals differ");

    sx.run();

    // Exact in-process certificate.
    bool ok = true;
    for (int i = 0; i < m; ++i) {
        Rat s(0);
        for (int j = 0; j < n; ++j) {
            if (sx.mass(i, j) < 0) ok = false;
            s += sx.mass(i, j);
        }
        if (s != sx.a[static_cast<std::size_t>(i)]) ok = false;
    }
    for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int i = 0; i < m; ++i) s += sx.mass(i, j);
        if (s != sx.b[static_cast<std::size_t>(j)]) ok = false;
    }
    Rat primal(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Rat rc = sx.cost(i, j) - sx.u[static_cast<std::size_t>(i)] -
                     sx.v[static_cast<std::size_t>(j)];
            if (rc > 0) ok = false;
            if (sx.mass(i, j) > 0 && rc != 0) ok = false;
            primal += sx.cost(i, j) * sx.mass(i, j);
        }
    Rat dual(0);
    for (int i = 0; i < m; ++i) dual += sx.a[static_cast<std::size_t>(i)] * sx.u[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) dual += sx.b[static_cast<std::size_t>(j)] * sx.v[static_cast<std::size_t>(j)];
    if (primal != dual) ok = false;
    if (!ok) throw SolverError("transportation: optimality certificate failed");

    LpResult res;
    res.plan = Table(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) res.plan.at(i, j) = sx.mass(i, j).get_d();
    res.value = primal.get_d();
    res.value_exact = primal.get_str();
    res.dual_u.resize(static_cast<std::size_t>(m));
    res.dual_v.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) res.dual_u[static_cast<std::size_t>(i)] = sx.u[static_cast<std::size_t>(i)].get_d();
    for (int j = 0; j < n; ++j) res.dual_v[static_cast<std::size_t>(j)] = sx.v[static_cast<std::size_t>(j)].get_d();
    res.certified = true;
    return res;
}

}  // namespace ccx
