#ifndef LOGOPS_REPORT_JSON_HPP
#define LOGOPS_REPORT_JSON_HPP

#include <json.hpp>

#include "logops/codes.hpp"
#include "logops/oracle.hpp"
#include "logops/sgsop.hpp"

// JSON emission for the CLI. Reports carry "schema": 1; keys are emitted
// in a fixed order so identical inputs produce byte-identical output.

namespace logops {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json report_to_json(const CodeReport& report);
CodeReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json decomposition_to_json(const SymplecticDecomposition& d);

nlohmann::ordered_json verification_to_json(const oracle::VerificationReport& report);

}  // namespace logops

#endif
