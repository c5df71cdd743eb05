#pragma once

// JSON-lines and CSV forms of audit reports. Color indices are 1-based.

#include "rainbow/audit/certificates.hpp"
#include "rainbow/audit/claims.hpp"
#include "rainbow/audit/identities.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>
#include <string>

namespace rainbow::audit {

namespace detail {

inline nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

inline nlohmann::json one_based(const std::vector<int>& v) {
  auto out = nlohmann::json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::json to_json(const ClaimReport& r) {
  nlohmann::json j{{"type", "claim"},
                   {"claim", claim_name(r.claim)},
                   {"indices", detail::one_based(r.indices)},
                   {"status", verdict_name(r.verdict)},
                   {"holds", r.verdict == Verdict::Holds},
                   {"lhs", detail::number_or_null(r.lhs)},
                   {"rhs", detail::number_or_null(r.rhs)}};
  if (!r.witness.empty()) j["witness"] = detail::one_based(r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"type", "identity"},
                   {"identity", identity_name(r.identity)},
                   {"status", verdict_name(r.verdict)},
                   {"holds", r.verdict == Verdict::Holds}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::json to_json(const CertificateReport& r) {
  nlohmann::json j{{"type", "certificate"},
                   {"id", r.id},
                   {"statement", r.statement},
                   {"domain", r.domain},
                   {"kind", kind_name(r.kind)},
                   {"verified", r.verified},
                   {"extremal_value", detail::number_or_null(r.extremal_value)},
                   {"grid", r.grid}};
  if (!r.threshold.empty()) j["threshold"] = r.threshold;
  if (!std::isnan(r.lipschitz)) {
    j["lipschitz"] = r.lipschitz;
    j["margin"] = detail::number_or_null(r.margin);
    j["min_scaled_gap"] = detail::number_or_null(r.min_scaled_gap);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline void write_certificate_csv_header(std::ostream& os) {
  os << "id,kind,verified,threshold,extremal_value,grid,lipschitz,margin,min_scaled_gap\n";
}

inline void write_certificate_csv_row(std::ostream& os, const CertificateReport& r) {
  auto num = [](double v) { return std::isnan(v) ? std::string() : nlohmann::json(v).dump(); };
  os << detail::csv_field(r.id) << ',' << kind_name(r.kind) << ',' << (r.verified ? "true" : "false") << ','
     << detail::csv_field(r.threshold) << ',' << num(r.extremal_value) << ',' << r.grid << ',' << num(r.lipschitz)
     << ',' << num(r.margin) << ',' << num(r.min_scaled_gap) << '\n';
}

}  // namespace rainbow::audit
