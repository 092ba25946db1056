#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or contract-violating input (empty grids, missing metrics,
// improper functions, infeasible marginals, out-of-range indices, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// An enumeration cap or size guard was exceeded; never silently skipped.
struct ResourceLimit : Error {
    using Error::Error;
};

// An iterative procedure hit its iteration budget before reaching tolerance.
struct NonConvergence : Error {
    double residual;
    NonConvergence(const std::string& what, double residual_)
        : Error(what), residual(residual_) {}
};

// The linear-programming solver failed to produce a certified optimum.
struct SolverError : Error {
    using Error::Error;
};

// A claimed optimality certificate failed verification.
struct CertificateMismatch : Error {
    using Error::Error;
};

}  // namespace ccx
