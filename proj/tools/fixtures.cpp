#include "fixtures.hpp"

#include <algorithm>
#include <cstddef>

#include "ccx/errors.hpp"

namespace ccxt {

using ccx::Coupling;
using ccx::CurveFamily;
using ccx::DiscreteMeasure;
using ccx::FiniteSpace;
using ccx::IndexPair;
using ccx::Relation;
using ccx::Table;

double Rng::uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

int Rng::uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
}

Coupling random_coupling(Rng& rng, int nx, int ny) {
    Table t(nx, ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) t.at(i, j) = rng.uniform(-1.0, 1.0);
    return ccx::make_table_coupling(FiniteSpace::points(nx), FiniteSpace::points(ny),
                                    std::move(t));
}

namespace {

std::vector<IndexPair> shuffled_product(Rng& rng, int nx, int ny) {
    std::vector<IndexPair> all;
    all.reserve(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) all.emplace_back(i, j);
    rng.shuffle(all);
    return all;
}

bool compatible(const Coupling& c, IndexPair p, const std::vector<IndexPair>& members) {
    for (auto [a, b] : members)
        if (ccx::pair_margin(c, p.first, p.second, a, b) < 0.0) return false;
    return true;
}

}  // namespace

Relation random_maximal_relation(Rng& rng, const Coupling& c) {
    std::vector<IndexPair> members;
    for (IndexPair p : shuffled_product(rng, c.nx(), c.ny()))
        if (compatible(c, p, members)) members.push_back(p);
    return ccx::make_relation(std::move(members));
}

Relation random_relation(Rng& rng, const Coupling& c, int max_size, bool monotone) {
    if (max_size < 1) throw ccx::InvalidInput("random_relation: empty size budget");
    std::vector<IndexPair> members;
    for (IndexPair p : shuffled_product(rng, c.nx(), c.ny())) {
        if (static_cast<int>(members.size()) == max_size) break;
        if (!monotone || compatible(c, p, members)) members.push_back(p);
    }
    return ccx::make_relation(std::move(members));
}

std::vector<int> random_map(Rng& rng, int nx, int ny) {
    std::vector<int> t(static_cast<std::size_t>(nx));
    for (auto& y : t) y = rng.uniform_int(0, ny - 1);
    return t;
}

DiscreteMeasure random_measure(Rng& rng, const FiniteSpace& space) {
    std::vector<double> w(static_cast<std::size_t>(space.size()));
    double total = 0.0;
    for (auto& x : w) {
        x = rng.uniform_int(1, 10);
        total += x;
    }
    for (auto& x : w) x /= total;
    return ccx::make_measure(space, std::move(w));
}

std::vector<int> rotation_map(int n, int steps) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = ((i + steps) % n + n) % n;
    return t;
}

CurveFamily grid_chord_curves(int n) {
    CurveFamily fam;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> path;
            std::vector<double> t;
            for (int k = a; k <= b; ++k) {
                path.push_back(k);
                t.push_back(static_cast<double>(k - a) / (b - a));
            }
            fam.curves.push_back(ccx::make_curve(a, b, std::move(path), std::move(t)));
        }
    return fam;
}

CurveFamily circle_geodesic_curves(int n) {
    CurveFamily fam;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int fwd = (b - a) % n;
            const int bwd = n - fwd;
            const int dir = (fwd <= bwd) ? 1 : -1;  // increasing indices on ties
            const int steps = std::min(fwd, bwd);
            std::vector<int> path;
            std::vector<double> t;
            for (int k = 0; k <= steps; ++k) {
                path.push_back(((a + dir * k) % n + n) % n);
                t.push_back(static_cast<double>(k) / steps);
            }
            fam.curves.push_back(ccx::make_curve(a, b, std::move(path), std::move(t)));
        }
    return fam;
}

std::vector<double> concave_band_potential(Rng& rng, const std::vector<double>& xgrid,
                                           double curv_lo, double curv_hi,
                                           double slope_band) {
    const int n = static_cast<int>(xgrid.size());
    if (n < 3) throw ccx::InvalidInput("concave_band_potential: grid too small");
    // Interval slopes accumulated from per-junction curvature draws, then
    // recentred so the mean slope is a small draw; curvature is untouched by
    // the shift, so chord behaviour of the conjugate is governed by the band.
    std::vector<double> slope(static_cast<std::size_t>(n - 1), 0.0);
    for (int i = 1; i < n - 1; ++i) {
        const double dx = xgrid[static_cast<std::size_t>(i)] - xgrid[static_cast<std::size_t>(i - 1)];
        slope[static_cast<std::size_t>(i)] =
            slope[static_cast<std::size_t>(i - 1)] + rng.uniform(curv_lo, curv_hi) * dx;
    }
    double mean = 0.0;
    for (double s : slope) mean += s;
    mean /= static_cast<double>(n - 1);
    const double shift = rng.uniform(-slope_band, slope_band) - mean;
    std::vector<double> phi(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
        const double dx = xgrid[static_cast<std::size_t>(i + 1)] - xgrid[static_cast<std::size_t>(i)];
        phi[static_cast<std::size_t>(i + 1)] =
            phi[static_cast<std::size_t>(i)] + (slope[static_cast<std::size_t>(i)] + shift) * dx;
    }
    return phi;
}

}  // namespace ccxt
