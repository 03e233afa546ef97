#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "faithcert/cli/config.hpp"
#include "faithcert/report/report.hpp"

namespace faithcert::cli {

inline constexpr const char* kReportSchema = "faithcert.report/1";

/// Runs the selected suites in dependency order: env, rees, sklyanin.
/// Hypothesis violations become precondition-error records.
CertificateReport run(const RunConfig& config);

/// 0 pass, 1 fail, 2 inconclusive, 3 configuration or hypothesis error.
int exit_code(Status verdict);

/// {"schema", "verdict", "checks": [...], "timing": {...}}. Everything
/// outside "timing" is a function of the configuration alone.
nlohmann::json report_to_json(const CertificateReport& report);
CertificateReport report_from_json(const nlohmann::json& json);

void emit_report(const CertificateReport& report, const std::string& path);
CertificateReport parse_report(const std::string& path);

}  // namespace faithcert::cli
