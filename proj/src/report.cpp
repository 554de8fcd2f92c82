#include "symfer/report.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace symfer {

std::string report_json(const SuiteReport& rep, int d,
                        const std::map<std::string, std::string>& params,
                        long elapsed_ms) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["d"] = d;
    j["params"] = params;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name},
                         {"expected", it.expected},
                         {"actual", it.actual},
                         {"pass", it.pass}});
    j["items"] = items;
    j["pass"] = rep.pass;
    j["inconclusive"] = rep.inconclusive;
    j["elapsed_ms"] = elapsed_ms;
    j["version"] = kVersion;

    auto now = std::chrono::system_clock::now();
    j["metadata"] = {
        {"timestamp",
         std::chrono::duration_cast<std::chrono::seconds>(
             now.time_since_epoch())
             .count()}};
    return j.dump(2) + "\n";
}

void emit_report(const std::string& path, const std::string& json) {
    if (path.empty()) {
        std::cout << json;
        return;
    }
    std::ofstream out(path);
    out << json;
}

} // namespace symfer
