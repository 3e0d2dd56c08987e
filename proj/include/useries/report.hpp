#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "useries/scenarios.hpp"

namespace useries {

inline std::string bounds_string(const std::map<std::string, long>& bounds) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : bounds) {
        if (!first) os << ",";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

inline nlohmann::json witness_json(const Witness& w) {
    return nlohmann::json{{"outer", w.outer},
                          {"inner", w.inner},
                          {"pair", {w.lhs.get_str(), w.rhs.get_str()}},
                          {"reason", reason_name(w.reason)}};
}

inline nlohmann::json result_json(const ScanResult& r) {
    nlohmann::json j;
    j["scenario"] = r.scenario;
    j["provenance"] = provenance_name(r.provenance);
    if (r.cls) j["class"] = {{"nu", r.cls->nu}, {"strict", r.cls->strict}};
    else j["class"] = nullptr;
    j["bounds"] = r.bounds_used;
    j["status"] = status_name(r.status);
    j["witness"] = r.witness ? witness_json(*r.witness) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

inline std::string emit_json(const std::vector<ScanResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    return arr.dump(2) + "\n";
}

inline std::string emit_text(const std::vector<ScanResult>& results) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "scenario" << std::setw(16) << "provenance"
       << std::setw(7) << "class" << std::setw(31) << "bounds" << std::setw(28)
       << "status" << std::right << std::setw(12) << "elapsed_ms" << "\n";
    os << std::string(104, '-') << "\n";
    for (const auto& r : results) {
        os << std::left << std::setw(10) << r.scenario << std::setw(16)
           << provenance_name(r.provenance) << std::setw(7)
           << (r.cls ? r.cls->name() : "-") << std::setw(31)
           << (bounds_string(r.bounds_used) + " ") << std::setw(28)
           << status_name(r.status) << std::right << std::setw(12) << std::fixed
           << std::setprecision(1) << r.elapsed_ms << "\n";
        if (r.witness) {
            const Witness& w = *r.witness;
            os << "    witness: outer " << w.outer << ", inner " << w.inner << ", pair ("
               << w.lhs.get_str() << ", " << w.rhs.get_str() << "), "
               << reason_name(w.reason) << "\n";
        }
        if (!r.detail.empty()) os << "    " << r.detail << "\n";
    }
    return os.str();
}

inline std::string emit_report(const std::vector<ScanResult>& results,
                               const std::string& format) {
    if (format == "json") return emit_json(results);
    if (format == "text") return emit_text(results);
    throw std::invalid_argument("emit_report: unknown format: " + format);
}

} // namespace useries
