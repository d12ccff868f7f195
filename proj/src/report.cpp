#include "layerslab/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace layerslab {

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

std::string ExperimentConfig::require(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw InvalidConfig("missing config key: " + key);
    return it->second;
}

long long ExperimentConfig::get_ll(const std::string& key, long long fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw InvalidConfig("bad integer for " + key + ": " + it->second);
    }
}

double ExperimentConfig::get_d(const std::string& key, double fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw InvalidConfig("bad number for " + key + ": " + it->second);
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

ExperimentConfig ExperimentConfig::from_string(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw InvalidConfig("expected key=value, got: " + t);
        cfg.kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot read config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_bool(bool b) { return b ? "1" : "0"; }

void emit_csv(const ExperimentReport& report, std::ostream& out) {
    for (const auto& [k, v] : report.config.kv) out << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < report.columns.size(); ++i)
        out << (i ? "," : "") << report.columns[i];
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream ss;
    emit_csv(report, ss);
    return ss.str();
}

void emit_json(const ExperimentReport& report, std::ostream& out) {
    nlohmann::json j;
    j["config"] = report.config.kv;
    j["columns"] = report.columns;
    j["rows"] = report.rows;
    j["wall_seconds"] = report.wall_seconds;
    out << j.dump(2) << '\n';
}

std::string to_json(const ExperimentReport& report) {
    std::ostringstream ss;
    emit_json(report, ss);
    return ss.str();
}

ExperimentReport parse_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoFailure(std::string("bad report json: ") + e.what());
    }
    ExperimentReport r;
    r.config.kv = j.at("config").get<std::map<std::string, std::string>>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    r.wall_seconds = j.value("wall_seconds", 0.0);
    return r;
}

bool reports_equivalent(const ExperimentReport& a, const ExperimentReport& b) {
    return a.config.kv == b.config.kv && a.columns == b.columns && a.rows == b.rows;
}

void write_report(const ExperimentReport& report, const std::string& path, const std::string& format) {
    const bool json = format == "json";
    if (!json && format != "csv") throw InvalidConfig("format must be csv or json");
    if (path.empty() || path == "-") {
        if (json) emit_json(report, std::cout);
        else emit_csv(report, std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open output file: " + path);
    if (json) emit_json(report, out);
    else emit_csv(report, out);
    if (!out) throw IoFailure("write failed: " + path);
}

} // namespace layerslab
