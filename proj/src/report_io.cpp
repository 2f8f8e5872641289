#include "sharklab/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace sharklab {

namespace {

using ojson = nlohmann::ordered_json;

ojson interval_json(const Interval& iv) { return ojson::array({to_string(iv.lo), to_string(iv.hi)}); }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string format_period_report_json(const PeriodReport& report) {
  ojson doc;
  doc["bound"] = report.bound;
  ojson periods = ojson::array();
  for (const auto& [n, w] : report.entries) periods.push_back(ojson::array({n, to_string(w)}));
  doc["periods"] = periods;
  doc["tail_class"] = report.tail_class ? ojson(to_string(*report.tail_class)) : ojson(nullptr);
  doc["ambiguous_at_bound"] = report.ambiguous_at_bound;
  doc["sharkovsky_tail"] = report.is_tail();
  return doc.dump(2) + "\n";
}

std::string format_period_report_text(const PeriodReport& report) {
  std::ostringstream os;
  os << "period  witness\n";
  for (const auto& [n, w] : report.entries) {
    std::string p = std::to_string(n);
    os << p << std::string(p.size() < 8 ? 8 - p.size() : 1, ' ') << to_string(w) << "\n";
  }
  os << "bound: " << report.bound << "\n";
  if (report.tail_class) {
    os << "tail class: " << to_string(*report.tail_class);
    if (report.ambiguous_at_bound) os << " (ambiguous at bound: also the 2^inf tail)";
    os << "\n";
  } else {
    os << "tail class: none\n";
  }
  os << "sharkovsky tail: " << (report.is_tail() ? "yes" : "no") << "\n";
  return os.str();
}

std::string format_certificate_json(const LoopCertificate& cert) {
  ojson doc;
  ojson cycle = ojson::array();
  for (const auto& iv : cert.cycle.intervals) cycle.push_back(interval_json(iv));
  ojson nested = ojson::array();
  for (const auto& iv : cert.nested) nested.push_back(interval_json(iv));
  doc["cycle"] = cycle;
  doc["nested"] = nested;
  doc["witness"] = to_string(cert.witness);
  return doc.dump(2) + "\n";
}

std::string format_abc_text(const AbcReport& report) {
  std::ostringstream os;
  if (report.checks.empty()) os << "(a)(b)(c): nothing applicable\n";
  for (const auto& c : report.checks) {
    os << "(" << c.rule << ") period " << c.m << " forces " << c.target << ": " << status_name(c.status)
       << "\n";
  }
  return os.str();
}

}  // namespace sharklab
