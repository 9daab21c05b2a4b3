#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "systole/verifier.hpp"

namespace systole {

enum class OutputFormat { Json, Csv, Human };

/// 17-significant-digit decimal rendering used by every machine-readable output.
std::string format_real(double x);
/// 6-significant-digit rendering for the human format.
std::string format_human(double x);

std::string_view to_string(CertificateStatus s);

/// Fields exactly as in CertificateReport; reals as 17-digit decimal strings.
nlohmann::ordered_json to_json(const CertificateReport& report);
std::string to_csv(const CertificateReport& report);
std::string to_human(const CertificateReport& report);
std::string render(const CertificateReport& report, OutputFormat format);

/// One row per sample: index, point coordinates (';'-joined), margin.
std::string margins_to_csv(const std::vector<MarginSample>& samples);

}  // namespace systole
