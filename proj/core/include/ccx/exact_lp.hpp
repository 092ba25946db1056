#pragma once

#include <string>
#include <vector>

#include "ccx/table.hpp"

namespace ccx {

// Solution of a dense balanced transportation problem
//
//   maximize   sum_ij cost(i,j) * plan(i,j)
//   subject to row sums of plan = supply, column sums = demand, plan >= 0,
//
// solved in exact rational arithmetic (binary doubles convert exactly), so
// the optimum carries an in-process certificate: primal feasibility, dual
// feasibility of the reduced costs, complementary slackness, and a zero
// primal-dual gap, all checked exactly before returning.
struct LpResult {
    Table plan;                  // optimal plan, rounded entrywise
    double value;                // optimal objective, rounded
    std::vector<double> dual_u;  // row potentials
    std::vector<double> dual_v;  // column potentials
    bool certified;              // always true on return; kept for reports
    std::string value_exact;     // optimal objective as an exact fraction
};

// Network simplex on the transportation polytope with Bland's pivot rule
// (deterministic, cycling-free). Throws InvalidInput for malformed inputs
// or unbalanced totals and SolverError if certification fails.
LpResult solve_transportation_max(const Table& cost, const std::vector<double>& supply,
                                  const std::vector<double>& demand);

}  // namespace ccx
