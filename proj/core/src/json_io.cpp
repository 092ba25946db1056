#include "ccx/json_io.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include <json.hpp>

#include "ccx/errors.hpp"

namespace ccx {
namespace {

using nlohmann::json;

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.is_array()) throw InvalidInput(std::string(key) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw InvalidInput(std::string(key) + " must hold numbers");
        double v = e.get<double>();
        if (!std::isfinite(v)) throw InvalidInput(std::string(key) + " holds a non-finite value");
        out.push_back(v);
    }
    return out;
}

std::vector<int> int_array(const json& j, const char* key) {
    if (!j.is_array()) throw InvalidInput(std::string(key) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InvalidInput(std::string(key) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// Matrix with every entry finite.
Table finite_matrix(const json& j, const char* key) {
    if (!j.is_array() || j.empty()) throw InvalidInput(std::string(key) + " must be a matrix");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    Table t;
    for (int i = 0; i < rows; ++i) {
        std::vector<double> row = number_array(j[static_cast<std::size_t>(i)], key);
        if (cols < 0) {
            cols = static_cast<int>(row.size());
            if (cols == 0) throw InvalidInput(std::string(key) + " has an empty row");
            t = Table(rows, cols);
        } else if (static_cast<int>(row.size()) != cols) {
            throw InvalidInput(std::string(key) + " rows have unequal lengths");
        }
        for (int k = 0; k < cols; ++k) t.at(i, k) = row[static_cast<std::size_t>(k)];
    }
    return t;
}

// Matrix where null entries read as +infinity.
Table extended_matrix(const json& j, const char* key) {
    if (!j.is_array() || j.empty()) throw InvalidInput(std::string(key) + " must be a matrix");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    Table t;
    for (int i = 0; i < rows; ++i) {
        const json& jrow = j[static_cast<std::size_t>(i)];
        if (!jrow.is_array()) throw InvalidInput(std::string(key) + " must be a matrix");
        if (cols < 0) {
            cols = static_cast<int>(jrow.size());
            if (cols == 0) throw InvalidInput(std::string(key) + " has an empty row");
            t = Table(rows, cols);
        } else if (static_cast<int>(jrow.size()) != cols) {
            throw InvalidInput(std::string(key) + " rows have unequal lengths");
        }
        for (int k = 0; k < cols; ++k) {
            const json& e = jrow[static_cast<std::size_t>(k)];
            if (e.is_null()) {
                t.at(i, k) = kPlusInfinity;
            } else if (e.is_number()) {
                double v = e.get<double>();
                if (std::isnan(v)) throw InvalidInput(std::string(key) + " holds NaN");
                t.at(i, k) = v;
            } else {
                throw InvalidInput(std::string(key) + " entries must be numbers or null");
            }
        }
    }
    return t;
}

std::pair<FiniteSpace, FiniteSpace> parse_spaces(const json& doc) {
    if (doc.contains("space")) {
        const json& s = doc["space"];
        if (!s.is_object() || !s.contains("kind"))
            throw InvalidInput("space must be an object with a kind");
        std::string kind = s["kind"].get<std::string>();
        if (kind == "circle") {
            if (!s.contains("n")) throw InvalidInput("circle space needs n");
            FiniteSpace sp = FiniteSpace::circle(s["n"].get<int>());
            return {sp, sp};
        }
        if (kind == "interval_grid") {
            if (!s.contains("a") || !s.contains("b") || !s.contains("n"))
                throw InvalidInput("interval_grid space needs a, b, n");
            FiniteSpace sp = FiniteSpace::interval_grid(s["a"].get<double>(),
                                                        s["b"].get<double>(), s["n"].get<int>());
            return {sp, sp};
        }
        if (kind == "points") {
            if (!s.contains("x")) throw InvalidInput("points space needs x coordinates");
            FiniteSpace sx = FiniteSpace::from_coords(number_array(s["x"], "space.x"));
            FiniteSpace sy =
                s.contains("y") ? FiniteSpace::from_coords(number_array(s["y"], "space.y")) : sx;
            return {sx, sy};
        }
        throw InvalidInput("unknown space kind: " + kind);
    }
    if (!doc.contains("x_points")) throw InvalidInput("document needs x_points or a space object");
    std::vector<double> xc = number_array(doc["x_points"], "x_points");
    FiniteSpace sx = doc.contains("metric")
                         ? FiniteSpace::with_metric(finite_matrix(doc["metric"], "metric"), xc)
                         : FiniteSpace::from_coords(xc);
    FiniteSpace sy = doc.contains("y_points")
                         ? FiniteSpace::from_coords(number_array(doc["y_points"], "y_points"))
                         : sx;
    return {sx, sy};
}

Coupling parse_cost(const json& doc, const FiniteSpace& sx, const FiniteSpace& sy) {
    if (!doc.contains("cost")) throw InvalidInput("document needs a cost");
    const json& c = doc["cost"];
    if (c.is_string()) {
        std::string tag = c.get<std::string>();
        if (tag == "inner_product") {
            if (!sx.has_coords() || !sy.has_coords())
                throw InvalidInput("inner_product cost needs coordinates");
            return make_inner_product_coupling(sx.coords(), sy.coords());
        }
        if (tag == "neg_half_sqdist") {
            if (sx.size() != sy.size())
                throw InvalidInput("neg_half_sqdist cost needs matching spaces");
            return make_neg_half_sqdist_coupling(sx);
        }
        if (tag == "arclength") {
            return make_arclength_coupling(sx);
        }
        throw InvalidInput("unknown cost tag: " + tag);
    }
    Table t = finite_matrix(c, "cost");
    if (t.rows() != sx.size() || t.cols() != sy.size())
        throw InvalidInput("cost shape does not match the spaces");
    return make_table_coupling(sx, sy, std::move(t));
}

CurveFamily parse_curves(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j.contains("paths") || !j.contains("t"))
        throw InvalidInput("curves need pairs, paths, and t");
    const json& pairs = j["pairs"];
    const json& paths = j["paths"];
    const json& ts = j["t"];
    if (!pairs.is_array() || !paths.is_array() || !ts.is_array() ||
        pairs.size() != paths.size() || pairs.size() != ts.size())
        throw InvalidInput("curves arrays must have equal lengths");
    CurveFamily fam;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        std::vector<int> ab = int_array(pairs[k], "curves.pairs");
        if (ab.size() != 2) throw InvalidInput("curves.pairs entries must be [a, b]");
        fam.curves.push_back(make_curve(ab[0], ab[1], int_array(paths[k], "curves.paths"),
                                        number_array(ts[k], "curves.t")));
    }
    return fam;
}

}  // namespace

InstanceDoc parse_instance_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("document must be a JSON object");

    InstanceDoc out;
    auto [sx, sy] = parse_spaces(doc);
    out.coupling = parse_cost(doc, sx, sy);
    const int nx = out.coupling.nx(), ny = out.coupling.ny();

    if (doc.contains("pairs")) {
        const json& jp = doc["pairs"];
        if (!jp.is_array()) throw InvalidInput("pairs must be an array");
        std::vector<IndexPair> pairs;
        for (const auto& e : jp) {
            std::vector<int> xy = int_array(e, "pairs");
            if (xy.size() != 2) throw InvalidInput("pairs entries must be [x, y]");
            if (xy[0] >= nx || xy[1] >= ny) throw InvalidInput("pair index out of range");
            pairs.emplace_back(xy[0], xy[1]);
        }
        out.relation = make_relation(std::move(pairs));
    }
    if (doc.contains("mu"))
        out.mu = make_measure(out.coupling.x, number_array(doc["mu"], "mu"));
    if (doc.contains("map_T")) {
        std::vector<int> T = int_array(doc["map_T"], "map_T");
        if (static_cast<int>(T.size()) != nx) throw InvalidInput("map_T must cover X");
        for (int v : T)
            if (v < 0 || v >= ny) throw InvalidInput("map_T value out of range");
        out.map_T = std::move(T);
    }
    if (doc.contains("phi")) {
        const json& jp = doc["phi"];
        if (!jp.is_array() || static_cast<int>(jp.size()) != nx)
            throw InvalidInput("phi must be an array over X");
        std::vector<double> phi;
        for (const auto& e : jp) {
            if (e.is_null()) {
                phi.push_back(kPlusInfinity);
            } else if (e.is_number()) {
                double v = e.get<double>();
                if (std::isnan(v)) throw InvalidInput("phi holds NaN");
                phi.push_back(v);
            } else {
                throw InvalidInput("phi entries must be numbers or null");
            }
        }
        out.phi = std::move(phi);
    }
    if (doc.contains("lagrangian")) {
        Table t = extended_matrix(doc["lagrangian"], "lagrangian");
        if (t.rows() != nx || t.cols() != ny)
            throw InvalidInput("lagrangian shape does not match the coupling");
        out.lagrangian = std::move(t);
    }
    if (doc.contains("p")) {
        if (!doc["p"].is_number_integer()) throw InvalidInput("p must be an integer");
        int p = doc["p"].get<int>();
        if (p < 0 || p >= ny) throw InvalidInput("p out of range");
        out.p = p;
    }
    if (doc.contains("B")) {
        std::vector<int> B = int_array(doc["B"], "B");
        if (static_cast<int>(B.size()) != nx) throw InvalidInput("B must cover X");
        for (int v : B)
            if (v < 0 || v >= ny) throw InvalidInput("B value out of range");
        out.skew_B = std::move(B);
    }
    if (doc.contains("curves")) out.curves = parse_curves(doc["curves"]);
    return out;
}

namespace {

json table_json(const Table& t) {
    json rows = json::array();
    for (int i = 0; i < t.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < t.cols(); ++j) {
            double v = t.at(i, j);
            if (std::isfinite(v))
                row.push_back(v);
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string table_to_json(const Table& t) { return table_json(t).dump(); }

std::string relation_to_json(const Relation& m) {
    json pairs = json::array();
    for (const auto& [x, y] : m.pairs) pairs.push_back(json::array({x, y}));
    json doc;
    doc["pairs"] = std::move(pairs);
    return doc.dump();
}

std::string lagrangian_to_json(const Lagrangian& L, double tol, int iterations) {
    json doc;
    doc["table"] = table_json(L.table);
    doc["residual"] = L.selfdual_residual;
    doc["tol"] = tol;
    doc["iterations"] = iterations;
    return doc.dump();
}

}  // namespace ccx
