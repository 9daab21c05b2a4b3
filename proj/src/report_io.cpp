#include "systole/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace systole {

namespace {

std::string format_with(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string join_point(const std::vector<double>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ';';
    out += format_real(point[i]);
  }
  return out;
}

}  // namespace

std::string format_real(double x) { return format_with("%.17g", x); }
std::string format_human(double x) { return format_with("%.6g", x == 0 ? 0.0 : x); }  // no "-0"

std::string_view to_string(CertificateStatus s) {
  return s == CertificateStatus::Pass ? "pass" : "fail";
}

nlohmann::ordered_json to_json(const CertificateReport& report) {
  nlohmann::ordered_json j;
  j["claim_id"] = report.claim_id;
  j["status"] = to_string(report.status);
  j["worst_margin"] = format_real(report.worst_margin);
  auto point = nlohmann::ordered_json::array();
  for (double x : report.worst_point) point.push_back(format_real(x));
  j["worst_point"] = std::move(point);
  j["points_checked"] = report.points_checked;
  if (report.seed) j["seed"] = *report.seed;
  return j;
}

std::string to_csv(const CertificateReport& report) {
  std::ostringstream os;
  os << "claim_id,status,worst_margin,worst_point,points_checked";
  if (report.seed) os << ",seed";
  os << '\n'
     << report.claim_id << ',' << to_string(report.status) << ',' << format_real(report.worst_margin)
     << ',' << join_point(report.worst_point) << ',' << report.points_checked;
  if (report.seed) os << ',' << *report.seed;
  os << '\n';
  return os.str();
}

std::string to_human(const CertificateReport& report) {
  std::ostringstream os;
  os << report.claim_id << ": " << to_string(report.status) << '\n'
     << "  worst margin   " << format_human(report.worst_margin) << '\n'
     << "  at             [";
  for (std::size_t i = 0; i < report.worst_point.size(); ++i) {
    os << (i ? ", " : "") << format_human(report.worst_point[i]);
  }
  os << "]\n"
     << "  points checked " << report.points_checked << '\n';
  if (report.seed) os << "  seed           " << *report.seed << '\n';
  return os.str();
}

std::string render(const CertificateReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv: return to_csv(report);
    case OutputFormat::Human: return to_human(report);
  }
  return {};
}

std::string margins_to_csv(const std::vector<MarginSample>& samples) {
  std::ostringstream os;
  os << "index,point,margin\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << i << ',' << join_point(samples[i].point) << ',' << format_real(samples[i].margin) << '\n';
  }
  return os.str();
}

}  // namespace systole
