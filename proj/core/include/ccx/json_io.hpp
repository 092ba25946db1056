#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccx/inversion.hpp"
#include "ccx/monotone.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "ccx/table.hpp"
#include "ccx/transport.hpp"

namespace ccx {

// One parsed fixture document. The coupling is always present; the other
// members appear when the corresponding JSON keys do.
//
// Accepted shape:
//   space:    either top-level "x_points"/"y_points" coordinate arrays with an
//             optional "metric" matrix for X, or a "space" object of kind
//             "circle" {n}, "interval_grid" {a,b,n}, or "points" {x, y?}
//   cost:     a full matrix, or one of the closed-form tags "inner_product",
//             "neg_half_sqdist", "arclength"
//   optional: "pairs" (relation), "mu", "map_T", "phi", "lagrangian", "p",
//             "B", "curves" {pairs, paths, t}
// Cost entries must be finite; "phi" and "lagrangian" entries may be null,
// which reads as +infinity.
struct InstanceDoc {
    Coupling coupling;
    std::optional<Relation> relation;
    std::optional<DiscreteMeasure> mu;
    std::optional<std::vector<int>> map_T;
    std::optional<std::vector<double>> phi;
    std::optional<Table> lagrangian;
    std::optional<int> p;
    std::optional<std::vector<int>> skew_B;
    std::optional<CurveFamily> curves;
};

// Throws InvalidInput on malformed or out-of-range documents.
InstanceDoc parse_instance_document(const std::string& text);

std::string table_to_json(const Table& t);
std::string relation_to_json(const Relation& m);
std::string lagrangian_to_json(const Lagrangian& L, double tol, int iterations);

}  // namespace ccx
