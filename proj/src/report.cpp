#include "hspace/report.hpp"

#include <gmp.h>

#include <chrono>
#include <sstream>

namespace hspace {

CheckRecord CheckRecord::pass(std::string name) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = "pass";
    return r;
}

CheckRecord CheckRecord::fail(std::string name, std::string details) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = "fail";
    r.details = std::move(details);
    return r;
}

CheckRecord CheckRecord::info(std::string name) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = "info";
    return r;
}

CheckRecord& CheckRecord::with_exact(std::string v) {
    exact_value = std::move(v);
    return *this;
}
CheckRecord& CheckRecord::with_float(double v) {
    float_value = v;
    return *this;
}
CheckRecord& CheckRecord::with_bound(double b) {
    bound = b;
    return *this;
}
CheckRecord& CheckRecord::with_window(std::string w) {
    window = std::move(w);
    return *this;
}
CheckRecord& CheckRecord::with_details(std::string d) {
    details = std::move(d);
    return *this;
}

void ReportBundle::add(CheckRecord rec) {
    if (!std::isnan(rec.float_value)) metrics[rec.name] = rec.float_value;
    records.push_back(std::move(rec));
}

bool ReportBundle::all_passed() const {
    for (const auto& r : records)
        if (r.status == "fail") return false;
    return true;
}

std::vector<const CheckRecord*> ReportBundle::failures() const {
    std::vector<const CheckRecord*> out;
    for (const auto& r : records)
        if (r.status == "fail") out.push_back(&r);
    return out;
}

namespace {
nlohmann::ordered_json record_json(const CheckRecord& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = r.status;
    if (!r.exact_value.empty()) j["exact"] = r.exact_value;
    if (!std::isnan(r.float_value)) j["value"] = r.float_value;
    if (!std::isnan(r.bound)) j["bound"] = r.bound;
    if (!r.window.empty()) j["window"] = r.window;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}
} // namespace

nlohmann::ordered_json ReportBundle::to_json(bool include_environment) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config"] = config_echo;
    if (include_environment) j["environment"] = environment_stamp();
    j["all_passed"] = all_passed();
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) j["records"].push_back(record_json(r));
    return j;
}

std::string ReportBundle::to_csv() const {
    std::ostringstream os;
    os << "name,status,exact,value,bound,window,details\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            out += c;
        }
        return out + "\"";
    };
    for (const auto& r : records) {
        os << quote(r.name) << "," << r.status << "," << quote(r.exact_value) << ",";
        if (!std::isnan(r.float_value)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", r.float_value);
            os << buf;
        }
        os << ",";
        if (!std::isnan(r.bound)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", r.bound);
            os << buf;
        }
        os << "," << quote(r.window) << "," << quote(r.details) << "\n";
    }
    return os.str();
}

nlohmann::ordered_json environment_stamp() {
    nlohmann::ordered_json j;
    const auto now = std::chrono::system_clock::now();
    j["unix_time"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    j["compiler"] = __VERSION__;
    j["gmp"] = gmp_version;
    return j;
}

} // namespace hspace
