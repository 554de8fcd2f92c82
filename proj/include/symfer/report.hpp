#pragma once

#include "symfer/c2.hpp"
#include <map>
#include <string>

namespace symfer {

inline constexpr const char* kVersion = "1.0.0";

// Serializes a suite result as JSON:
// {suite, d, params, items:[{name, expected, actual, pass}], pass,
//  inconclusive, elapsed_ms, version, metadata:{timestamp}}.
// Rationals appear as "p/q" strings; everything outside metadata is
// deterministic for a fixed configuration.
std::string report_json(const SuiteReport& rep, int d,
                        const std::map<std::string, std::string>& params,
                        long elapsed_ms);

// Writes to the path, or to stdout when path is empty.
void emit_report(const std::string& path, const std::string& json);

} // namespace symfer
