#include "reports.hpp"

#include <cmath>
#include <cstdint>

#include <json.hpp>

namespace ccxt {

using nlohmann::json;

void RunReport::add(std::string name, double residual, bool pass, std::string note) {
    checks.push_back(CheckLine{std::move(name), residual, pass, std::move(note)});
}

void RunReport::add_artifact(std::string name, std::string json_text) {
    artifacts.emplace_back(std::move(name), std::move(json_text));
}

void RunReport::add_timing(std::string name, double seconds) {
    timings.emplace_back(std::move(name), seconds);
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

json residual_value(double r) {
    // JSON has no inf/nan literals; keep such residuals readable as strings.
    if (std::isnan(r)) return "nan";
    if (std::isinf(r)) return r > 0 ? "inf" : "-inf";
    return r;
}

}  // namespace

std::string RunReport::to_json() const {
    json doc;
    doc["command"] = command;
    doc["digest"] = instance_digest;
    doc["version"] = version;
    json cs = json::array();
    for (const auto& c : checks) {
        json line;
        line["name"] = c.name;
        line["residual"] = residual_value(c.residual);
        line["pass"] = c.pass;
        line["note"] = c.note;
        cs.push_back(std::move(line));
    }
    doc["checks"] = std::move(cs);
    doc["all_pass"] = all_pass();
    json arts = json::object();
    for (const auto& [name, text] : artifacts) arts[name] = json::parse(text);
    doc["artifacts"] = std::move(arts);
    if (with_timings) {
        json ts = json::object();
        for (const auto& [name, sec] : timings) ts[name] = sec;
        doc["timings"] = std::move(ts);
    }
    return doc.dump(2) + "\n";
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace ccxt
