#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccx/inversion.hpp"
#include "ccx/monotone.hpp"
#include "ccx/space.hpp"
#include "ccx/transport.hpp"

namespace ccxt {

// Deterministic generator with an implementation-pinned draw path: doubles
// come from the top 53 bits of the raw engine output and integers from
// rejection sampling, so seeded fixtures are byte-identical across standard
// libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    double uniform01();                    // [0, 1) on the 53-bit grid
    double uniform(double a, double b);    // a + (b-a) * uniform01
    int uniform_int(int lo, int hi);       // inclusive bounds

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int k = static_cast<int>(v.size()) - 1; k > 0; --k)
            std::swap(v[static_cast<std::size_t>(k)],
                      v[static_cast<std::size_t>(uniform_int(0, k))]);
    }

  private:
    std::mt19937_64 eng_;
};

// Generic coupling with independent uniform [-1, 1] entries over bare point
// spaces of the given sizes.
ccx::Coupling random_coupling(Rng& rng, int nx, int ny);

// Greedy pass over a random ordering of the full product: a pair joins the
// relation iff it is compatible with every member so far. Because every pair
// is visited and membership only grows, the result is maximal c-monotone by
// construction (each rejected pair stays incompatible with a fixed member).
ccx::Relation random_maximal_relation(Rng& rng, const ccx::Coupling& c);

// First max_size pairs of a greedy monotone pass (monotone, not necessarily
// maximal), or a plain random subset when monotone = false.
ccx::Relation random_relation(Rng& rng, const ccx::Coupling& c, int max_size, bool monotone);

// Total map X -> Y with independent uniform values.
std::vector<int> random_map(Rng& rng, int nx, int ny);

// Weights drawn as integers 1..10 and normalized by the exact total.
ccx::DiscreteMeasure random_measure(Rng& rng, const ccx::FiniteSpace& space);

// i -> i + steps (mod n).
std::vector<int> rotation_map(int n, int steps);

// One curve per unordered index pair (a, b), a < b:
//   interval grids: the consecutive-index path with proportional parameters;
//   circles: the geodesic arc, taking the increasing-index direction on
//   antipodal ties, with parameters proportional to arc position.
ccx::CurveFamily grid_chord_curves(int n);
ccx::CurveFamily circle_geodesic_curves(int n);

// Concave potential on an x-grid whose conjugate under c(x,y) = -(x-y)^2 is
// strictly chord-convex on a coarser y-grid. Mechanism: the conjugate splits
// as -y^2 plus a piecewise-linear convex envelope, and a curvature band
// strong enough to advance the envelope's argmax between adjacent y-nodes
// gives the envelope kink mass dominating the -y^2 chord deficit. The slope
// draw recentres the overall tilt without touching curvature.
std::vector<double> concave_band_potential(Rng& rng, const std::vector<double>& xgrid,
                                           double curv_lo, double curv_hi,
                                           double slope_band);

}  // namespace ccxt
