#pragma once

#include <string>

#include "sharklab/periodic.hpp"

namespace sharklab {

// {"bound": N, "periods": [[n, "p/q"], ...], "tail_class": "c" | null,
//  "ambiguous_at_bound": bool, "sharkovsky_tail": bool}
std::string format_period_report_json(const PeriodReport& report);

// Aligned two-column table followed by the tail verdict.
std::string format_period_report_text(const PeriodReport& report);

// {"cycle": [["lo", "hi"], ...], "nested": [...], "witness": "p/q"}
std::string format_certificate_json(const LoopCertificate& cert);

std::string format_abc_text(const AbcReport& report);

}  // namespace sharklab
