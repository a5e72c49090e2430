#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "etaq/cphi.hpp"
#include "etaq/eta.hpp"
#include "etaq/series.hpp"
#include "etaq/verify.hpp"

namespace etaq {

// JSON layouts:
//   Series     {"modulus": M | "exact", "truncation": N, "coeffs": [...]}
//              (modular coefficients as numbers already reduced to [0, M);
//              exact coefficients as decimal strings)
//   CphiTable  {"flavor": ..., "series": ...}
//   reports    {"claim", "status", "witness", "checked_count",
//               "elapsed_ms", "truncation", "modulus", "ord_lower_bound"}
// All structures round-trip bit-exactly apart from nothing: parse(print(x))
// equals x.

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CphiTable& t);
CphiTable cphi_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CongruenceClaim& c);
CongruenceClaim claim_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckResult& c);
CheckResult check_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScriptReport& r);
ScriptReport script_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& r);

// CSV: one "n,value" row per coefficient, no header.
void write_csv(std::ostream& os, const Series& s);
// CSV with a leading comment line recording flavor, modulus, truncation.
void write_csv(std::ostream& os, const CphiTable& t);
Series series_from_csv(std::istream& is, Modulus m);

} // namespace etaq
