#include "hyperlag/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace hyperlag {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coords(const SimplexVector& x) {
  ordered_json out = ordered_json::array();
  for (double v : x.coords()) out.push_back(v);
  return out;
}

ordered_json result_json(const LagrangianResult& r) {
  ordered_json j;
  j["value"] = r.value;
  j["argmax"] = coords(r.argmax);
  j["restarts_used"] = r.restarts_used;
  j["converged"] = r.converged;
  j["converged_restarts"] = r.converged_restarts;
  j["best_restart"] = r.best_restart;
  j["iterations"] = r.iterations;
  j["certified"] = r.certified;
  j["recognized_pk"] = r.recognized_pk;
  j["closed_form"] = r.closed_form ? ordered_json(*r.closed_form) : ordered_json(nullptr);
  return j;
}

ordered_json divisibility_json(const DivisibilityReport& d) {
  ordered_json j;
  j["k"] = d.k;
  j["b_sequence_checked"] = d.b_sequence_checked;
  j["indices_examined"] = d.indices_examined;
  j["cond_i_holds"] = d.cond_i_holds;
  j["cond_ii_holds"] = d.cond_ii_holds;
  j["failing_indices"] = d.failing_indices;
  return j;
}

ordered_json bigfloat_json(const BigFloat& v) {
  // Decimal mantissa/exponent pair plus log2 for quick reading.
  ordered_json j;
  const std::string s = v.to_string(17);
  const auto e = s.find('e');
  j["mantissa"] = s.substr(0, e);
  j["exponent10"] = e == std::string::npos ? 0 : std::stol(s.substr(e + 1));
  j["log2"] = v.is_zero() ? ordered_json(nullptr) : ordered_json(v.log2_abs());
  return j;
}

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string to_json(const LagrangianResult& result, int indent) { return result_json(result).dump(indent); }

std::string to_json(const MinimalityReport& report, int indent) {
  ordered_json j;
  j["is_minimal"] = report.is_minimal;
  j["lambda"] = report.lambda;
  j["threshold"] = report.threshold;
  j["converged"] = report.converged;
  ordered_json per = ordered_json::array();
  for (const auto& im : report.per_index) {
    ordered_json e;
    e["index"] = im.index;
    e["lambda_without"] = im.lambda_without;
    e["margin"] = im.margin;
    e["converged"] = im.converged;
    per.push_back(std::move(e));
  }
  j["per_index"] = std::move(per);
  j["lagrangian"] = result_json(report.full);
  return j.dump(indent);
}

std::string to_json(const DivisibilityReport& report, int indent) { return divisibility_json(report).dump(indent); }

std::string to_json(const DegreeCertificate& cert, int indent) {
  ordered_json j;
  j["k"] = cert.k;
  j["degree"] = cert.polynomial.degree();
  j["claimed_degree"] = cert.claimed_degree;
  j["precision_bits"] = cert.precision_bits;
  j["residual_bound"] = bigfloat_json(cert.residual_bound);
  j["tolerance"] = bigfloat_json(cert.tolerance);
  j["eisenstein_prime"] = cert.eisenstein_prime;
  j["eisenstein_passed"] = cert.eisenstein.passed;
  j["eisenstein_orientation"] = to_string(cert.eisenstein.orientation);
  j["leading_mod_q2"] = cert.eisenstein.leading_mod_q2.get_str();
  j["constant_mod_q2"] = cert.eisenstein.constant_mod_q2.get_str();
  j["divisibility"] = divisibility_json(cert.divisibility);
  j["valid"] = cert.valid;
  j["failures"] = cert.failures;
  return j.dump(indent);
}

}  // namespace hyperlag
