#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ccx/space.hpp"

namespace ccx {

using IndexPair = std::pair<int, int>;

// A nonempty duplicate-free subset of X x Y; the graph of a possibly
// set-valued map. Pairs are kept sorted lexicographically.
struct Relation {
    std::vector<IndexPair> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool contains(int x, int y) const;
};

Relation make_relation(std::vector<IndexPair> pairs);
// Graph of a total map T (y-index per x-index).
Relation graph_of_map(const std::vector<int>& T);

// The compatibility margin of two members:
//   c(x1,y1) + c(x2,y2) - c(x1,y2) - c(x2,y1).
// Nonnegative for all member pairs iff the relation is c-monotone.
double pair_margin(const Coupling& c, int x1, int y1, int x2, int y2);

struct MonotoneCheck {
    bool ok = true;
    double worst = 0.0;  // smallest margin over member pairs (>= -tol when ok)
    // Lexicographically first violating member pair ((x1,y1),(x2,y2)).
    std::optional<std::array<int, 4>> witness;
};

MonotoneCheck is_c_monotone(const Relation& M, const Coupling& c, double tol = 1e-9);

struct CyclicCheck {
    bool ok = true;
    double worst_cycle_sum = 0.0;
    std::optional<std::vector<IndexPair>> witness_cycle;
};

// Exhaustively checks all n-tuples of members (with repetition) for
//   sum_i [ c(x_i, y_i) - c(x_{i+1}, y_i) ] >= -tol  (indices cyclic).
// Guards: order n in [2, 5]; |M| capped per order to keep |M|^n enumerable.
CyclicCheck is_c_cyclically_monotone(const Relation& M, const Coupling& c, int n,
                                     double tol = 1e-9);

struct MaximalityCheck {
    bool maximal = true;
    // All pairs outside M whose addition preserves c-monotonicity, sorted.
    std::vector<IndexPair> admissible_extensions;
};

// A single-pair extension search decides maximality exactly: c-monotonicity
// is a pairwise condition, so a relation extends iff some single outside pair
// is compatible with every member.
MaximalityCheck is_maximal_c_monotone(const Relation& M, const Coupling& c,
                                      double tol = 1e-9);

// The lift M -> { ((x,y),(y,x)) } into (X x Y) x (Y x X).
struct Enlargement {
    Relation source;
    std::vector<std::pair<UPoint, VPoint>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

Enlargement enlarge(const Relation& M);

struct EnlargementEquivalenceReport {
    bool m_monotone = false;
    // order -> whether the lifted relation is cyclically monotone at that
    // order for the symmetrized cost (orders 2..n_max).
    std::vector<std::pair<int, bool>> lifted_cyclic_by_order;
    bool equivalent = false;  // m_monotone agrees with all lifted orders
    // Largest |lifted 2-cycle sum - 2 * pair margin| over all member pairs:
    // the exact algebraic identity linking the two notions at order 2.
    double order2_identity_residual = 0.0;
};

EnlargementEquivalenceReport check_enlargement_equivalence(const Relation& M,
                                                           const Coupling& c,
                                                           int n_max = 4,
                                                           double tol = 1e-9);

}  // namespace ccx
