#include "ccx/ctransform.hpp"

#include <algorithm>
#include <cmath>

#include "ccx/errors.hpp"

namespace ccx {

bool ValueTable::is_proper() const {
    for (double v : values)
        if (std::isfinite(v)) return true;
    return false;
}

ValueTable make_value_table(FiniteSpace space, std::vector<double> values) {
    if (static_cast<int>(values.size()) != space.size())
        throw InvalidInput("make_value_table: size mismatch");
    for (double v : values)
        if (std::isnan(v) || v == -kPlusInfinity)
            throw InvalidInput("make_value_table: entries must be finite or +inf");
    ValueTable f{std::move(space), std::move(values)};
    if (!f.is_proper()) throw InvalidInput("make_value_table: function has no finite entry");
    return f;
}

ValueTable c_conjugate(const ValueTable& f, const Coupling& c) {
    if (f.size() != c.nx()) throw InvalidInput("c_conjugate: domain size mismatch");
    if (!f.is_proper()) throw InvalidInput("c_conjugate: improper function");
    std::vector<double> out(static_cast<std::size_t>(c.ny()), -kPlusInfinity);
    for (int j = 0; j < c.ny(); ++j) {
        double best = -kPlusInfinity;
        for (int i = 0; i < c.nx(); ++i) {
            double fi = f.values[static_cast<std::size_t>(i)];
            if (!std::isfinite(fi)) continue;
            best = std::max(best, c.at(i, j) - fi);
        }
        out[static_cast<std::size_t>(j)] = best;
    }
    return ValueTable{c.y, std::move(out)};
}

ValueTable c_double_conjugate(const ValueTable& f, const Coupling& c) {
    ValueTable fc = c_conjugate(f, c);
    // Conjugate back through the same cost read with its arguments swapped.
    std::vector<double> out(static_cast<std::size_t>(c.nx()), -kPlusInfinity);
    for (int i = 0; i < c.nx(); ++i) {
        double best = -kPlusInfinity;
        for (int j = 0; j < c.ny(); ++j)
            best = std::max(best, c.at(i, j) - fc.values[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(i)] = best;
    }
    return ValueTable{c.x, std::move(out)};
}

bool is_c_convex(const ValueTable& f, const Coupling& c, double tol) {
    ValueTable fcc = c_double_conjugate(f, c);
    double worst = 0.0;
    for (int i = 0; i < f.size(); ++i) {
        double a = f.values[static_cast<std::size_t>(i)];
        double b = fcc.values[static_cast<std::size_t>(i)];
        if (std::isinf(a) && std::isinf(b) && a == b) continue;
        worst = std::max(worst, std::abs(a - b));
    }
    return worst <= tol;
}

std::vector<int> c_subdifferential(const ValueTable& f, const Coupling& c, int x0,
                                   double tol) {
    if (x0 < 0 || x0 >= f.size()) throw InvalidInput("c_subdifferential: index out of range");
    std::vector<int> out;
    double f0 = f.values[static_cast<std::size_t>(x0)];
    if (!std::isfinite(f0)) return out;  // empty: no subgradients at +inf points
    ValueTable fc = c_conjugate(f, c);
    // y belongs iff the conjugate inequality f(x0) + f^c(y) >= c(x0,y) is an
    // equality; f^c(y) is exactly the max of c(x,y) - f(x) over x, so this is
    // the pairwise definition with the maximum folded in.
    for (int j = 0; j < c.ny(); ++j)
        if (f0 + fc.values[static_cast<std::size_t>(j)] - c.at(x0, j) <= tol) out.push_back(j);
    return out;
}

double check_young(const ValueTable& f, const Coupling& c) {
    ValueTable fc = c_conjugate(f, c);
    double worst = -kPlusInfinity;
    for (int i = 0; i < c.nx(); ++i) {
        double fi = f.values[static_cast<std::size_t>(i)];
        if (!std::isfinite(fi)) continue;
        for (int j = 0; j < c.ny(); ++j)
            worst = std::max(worst, c.at(i, j) - fi - fc.values[static_cast<std::size_t>(j)]);
    }
    return worst;
}

}  // namespace ccx
