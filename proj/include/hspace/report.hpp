// report.hpp : structured check records and their JSON/CSV serializations.
#pragma once

#include <json.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace hspace {

struct CheckRecord {
    std::string name;
    std::string status;      // "pass" | "fail" | "info"
    std::string exact_value; // empty when not exact-representable
    double float_value = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::quiet_NaN();
    std::string window;      // validity window, e.g. "n <= 63"
    std::string details;     // failure offenders, context

    static CheckRecord pass(std::string name);
    static CheckRecord fail(std::string name, std::string details);
    static CheckRecord info(std::string name);
    CheckRecord& with_exact(std::string v);
    CheckRecord& with_float(double v);
    CheckRecord& with_bound(double b);
    CheckRecord& with_window(std::string w);
    CheckRecord& with_details(std::string d);
};

// Deterministic for a fixed config and mode: records in a fixed order, keys
// ordered, floats emitted with shortest round-trip formatting.  The
// environment stamp is the only non-deterministic part and can be excluded.
struct ReportBundle {
    std::string command;
    nlohmann::ordered_json config_echo;
    std::vector<CheckRecord> records;
    // named float values for cross-mode comparison
    std::map<std::string, double> metrics;

    void add(CheckRecord rec);
    void metric(const std::string& name, double value) { metrics[name] = value; }
    bool all_passed() const;
    std::vector<const CheckRecord*> failures() const;

    nlohmann::ordered_json to_json(bool include_environment = true) const;
    std::string to_csv() const;
};

nlohmann::ordered_json environment_stamp();

} // namespace hspace
