// Machine-readable run reports: named checks with residuals, content digests
// of inputs, and embedded JSON artifacts.  Serialization is byte-stable across
// runs: object keys are sorted, doubles use shortest round-trip form, and wall
// times are only attached when explicitly requested.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccxt {

struct CheckLine {
    std::string name;
    double residual = 0.0;
    bool pass = false;
    std::string note;
};

struct RunReport {
    std::string command;
    std::string instance_digest = "-";
    std::string version = "0.1.0";
    std::vector<CheckLine> checks;
    // Artifact name -> raw JSON text; re-parsed and embedded at dump time.
    std::vector<std::pair<std::string, std::string>> artifacts;
    std::vector<std::pair<std::string, double>> timings;
    bool with_timings = false;

    void add(std::string name, double residual, bool pass, std::string note = {});
    void add_artifact(std::string name, std::string json_text);
    void add_timing(std::string name, double seconds);
    bool all_pass() const;
    std::string to_json() const;
};

// FNV-1a 64-bit content hash, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace ccxt
