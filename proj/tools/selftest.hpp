// The acceptance suite: fourteen numbered end-to-end criteria spanning the
// whole library, each producing named checks with measured residuals.  All
// randomness derives from a single caller seed, so two runs with the same
// seed must agree byte-for-byte on the canonical serialization (which the
// final criterion verifies by running the first thirteen twice).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "reports.hpp"

namespace ccxt {

struct CriterionOutcome {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<CheckLine> checks;
    std::string note;
    double seconds = 0.0;  // wall time; excluded from the canonical serialization
};

struct AcceptanceOutcome {
    std::vector<CriterionOutcome> criteria;
    bool all_pass = false;
};

// Run the full suite (criterion == 0) or a single criterion (1..14).
AcceptanceOutcome run_acceptance_suite(std::uint64_t seed, int criterion = 0);

// Deterministic JSON for the criteria results: ids, names, checks, residuals
// and verdicts, but no wall times.
std::string canonical_criteria_json(const AcceptanceOutcome& out);

// One line per criterion ("criterion 03 PASS representation-sandwich ..."),
// with failing checks expanded underneath. Wall times are printed only on
// request so the default output is byte-stable for a fixed seed.
void print_outcomes(const AcceptanceOutcome& out, std::ostream& os, bool show_seconds = false);

}  // namespace ccxt
