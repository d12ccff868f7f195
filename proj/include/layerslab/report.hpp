#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "layerslab/errors.hpp"

namespace layerslab {

// Experiment parameters as an ordered key/value map; "experiment" names the
// registered runner. The sorted order makes the config echo canonical.
struct ExperimentConfig {
    std::map<std::string, std::string> kv;

    std::string experiment() const { return get("experiment", ""); }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const; // InvalidConfig when absent
    long long get_ll(const std::string& key, long long fallback) const;
    double get_d(const std::string& key, double fallback) const;
    std::uint64_t seed() const { return static_cast<std::uint64_t>(get_ll("seed", 0)); }

    void set(const std::string& key, const std::string& value) { kv[key] = value; }

    // Plain "key = value" lines; '#' starts a comment.
    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_string(const std::string& text);
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    double wall_seconds = 0.0;
};

// Stable float formatting shared by every emitter, so replays are
// byte-identical.
std::string fmt_double(double x);
std::string fmt_bool(bool b);

// CSV: sorted "# key=value" config echo, header row, data rows. Wall clock
// is deliberately not in the CSV so replays compare bitwise.
void emit_csv(const ExperimentReport& report, std::ostream& out);
std::string to_csv(const ExperimentReport& report);

void emit_json(const ExperimentReport& report, std::ostream& out);
std::string to_json(const ExperimentReport& report);
ExperimentReport parse_json(std::istream& in);

// Equality over config, columns and rows (wall clock is runtime noise).
bool reports_equivalent(const ExperimentReport& a, const ExperimentReport& b);

// path "-" writes to stdout; format is "csv" or "json".
void write_report(const ExperimentReport& report, const std::string& path, const std::string& format);

} // namespace layerslab
