#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "lamplighter/audit.hpp"
#include "lamplighter/verify.hpp"

namespace lamplighter {

/// Rationals serialize as "p/q" strings so they stay exact.
nlohmann::ordered_json to_json(const DistortionReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json to_json(const Baseline& baseline);
Baseline baseline_from_json(const nlohmann::json& j);

/// One row per rule; violations are counted, not listed.
void write_csv(std::ostream& out, const VerifyReport& report);
void write_csv(std::ostream& out, const DistortionReport& report);

}  // namespace lamplighter
