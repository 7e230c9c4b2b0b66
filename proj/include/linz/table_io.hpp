#pragma once

#include <linz/stochastic.hpp>
#include <linz/verify.hpp>

#include <json.hpp>

#include <string>

namespace linz {

// Renderers shared by the CLI and tests. Exact values cross this boundary
// only as canonical "p/q" strings; doubles appear only in the explicitly
// numeric reports (densities, KS statistics, d-statistic weights).

/// {"command":..., "params":..., "entries":[{"k":..,"value":..}], "checks":{..}}
/// Symbolic tables render each value as {"apoly": ["c0","c1",...]}, numeric
/// tables as a single "p/q" string.
nlohmann::json table_to_json(const CoeffTable& table, const std::string& command,
                             nlohmann::json params, bool suppress_zeros);

/// Numeric tables: header "k,value". Symbolic tables: "k,a0,...,aD" with all
/// rows padded to the widest entry. Rational strings match the JSON output.
std::string table_to_csv(const CoeffTable& table, bool suppress_zeros);

nlohmann::json mixture_to_json(const MixtureSpec& mix, const std::string& command,
                               nlohmann::json params);

nlohmann::json ks_report_to_json(const KsReport& report);

nlohmann::json check_results_to_json(const std::string& suite,
                                     const std::vector<CheckResult>& results,
                                     nlohmann::json params);

}  // namespace linz
