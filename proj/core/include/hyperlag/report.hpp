#pragma once

#include <string>

#include "hyperlag/certificate.hpp"
#include "hyperlag/optimizer.hpp"

namespace hyperlag {

// Structured JSON text with a fixed field order; see docs/report_schema.md.
std::string to_json(const LagrangianResult& result, int indent = 2);
std::string to_json(const MinimalityReport& report, int indent = 2);
std::string to_json(const DivisibilityReport& report, int indent = 2);
std::string to_json(const DegreeCertificate& cert, int indent = 2);

// "%.6f" that never prints "-0.000000".
std::string format_fixed6(double v);

}  // namespace hyperlag
