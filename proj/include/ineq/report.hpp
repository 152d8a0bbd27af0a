#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ineq/function_catalog.hpp"
#include "ineq/verifier.hpp"

namespace ineq {

// Shortest round-trip decimal representation, at most 17 significant digits.
std::string format_double(double v);

nlohmann::json to_json(const CertificationResult& cert);
nlohmann::json to_json(const BetaTerm& term);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const FunctionSpec& spec);
nlohmann::json to_json(const FalsificationSummary& summary);

// Top-level report document: {command, config, reports, summary}.
nlohmann::json report_document(const std::string& command, nlohmann::json config,
                               const std::vector<VerificationReport>& reports);

// Fixed-column CSV (header included):
// command,function,formula,a,b,p,q,s,lhs,lhs_error,rhs,slack,ratio,verdict,certified
std::string reports_to_csv(const std::string& command,
                           const std::vector<VerificationReport>& reports);

// Fixed-column CSV for the catalog:
// id,kind,domain_lo,domain_hi,classes,monotonicity,symmetric
std::string catalog_to_csv(const std::vector<FunctionSpec>& specs);

// Human-readable alignment of the same per-report columns.
std::string reports_to_table(const std::vector<VerificationReport>& reports);
std::string catalog_to_table(const std::vector<FunctionSpec>& specs);

// Exit code contract: 0 all Holds, 1 any Violated, 2 any Inconclusive (and
// none Violated), 3 usage/domain error (assigned by the CLI).
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace ineq
