#include <linz/table_io.hpp>

#include <sstream>

namespace linz {

namespace {

nlohmann::json entry_value(const CoeffTable& table, const APoly& e) {
  if (!table.symbolic) return e.is_zero() ? "0" : e.coeff(0).str();
  return nlohmann::json{{"apoly", e.coeff_strings()}};
}

}  // namespace

nlohmann::json table_to_json(const CoeffTable& table, const std::string& command,
                             nlohmann::json params, bool suppress_zeros) {
  nlohmann::json entries = nlohmann::json::array();
  for (size_t k = 0; k < table.entries.size(); ++k) {
    if (suppress_zeros && table.entries[k].is_zero()) continue;
    entries.push_back({{"k", k}, {"value", entry_value(table, table.entries[k])}});
  }
  bool sum_is_one = table.entry_sum() == APoly::constant(1);
  return nlohmann::json{{"command", command},
                        {"params", std::move(params)},
                        {"entries", std::move(entries)},
                        {"checks", {{"sum_is_one", sum_is_one}}}};
}

std::string table_to_csv(const CoeffTable& table, bool suppress_zeros) {
  std::ostringstream os;
  if (!table.symbolic) {
    os << "k,value\n";
    for (size_t k = 0; k < table.entries.size(); ++k) {
      const APoly& e = table.entries[k];
      if (suppress_zeros && e.is_zero()) continue;
      os << k << "," << (e.is_zero() ? "0" : e.coeff(0).str()) << "\n";
    }
    return os.str();
  }
  int width = 0;
  for (const auto& e : table.entries) width = std::max(width, e.degree());
  os << "k";
  for (int j = 0; j <= std::max(width, 0); ++j) os << ",a" << j;
  os << "\n";
  for (size_t k = 0; k < table.entries.size(); ++k) {
    const APoly& e = table.entries[k];
    if (suppress_zeros && e.is_zero()) continue;
    os << k;
    for (int j = 0; j <= std::max(width, 0); ++j) os << "," << e.coeff(j).str();
    os << "\n";
  }
  return os.str();
}

nlohmann::json mixture_to_json(const MixtureSpec& mix, const std::string& command,
                               nlohmann::json params) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& c : mix.components)
    entries.push_back({{"k", c.k}, {"dof", 2 * c.k + 1}, {"value", c.weight.to_double()}});
  return nlohmann::json{{"command", command},
                        {"params", std::move(params)},
                        {"entries", std::move(entries)},
                        {"checks", {{"exact_sum_is_one", true}}}};
}

nlohmann::json ks_report_to_json(const KsReport& report) {
  return nlohmann::json{
      {"command", "mc-check"},
      {"params", {{"kind", report.kind}, {"n", report.n}, {"m", report.m}, {"a", report.a}}},
      {"samples", report.samples},
      {"seed", report.seed},
      {"ks_statistic", report.ks_statistic},
      {"critical_value", report.critical_value},
      {"pass", report.pass}};
}

nlohmann::json check_results_to_json(const std::string& suite,
                                     const std::vector<CheckResult>& results,
                                     nlohmann::json params) {
  nlohmann::json checks;
  bool all = true;
  for (const auto& r : results) {
    checks[r.name] = {{"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}};
    all = all && r.pass;
  }
  return nlohmann::json{{"command", "verify"},
                        {"params", std::move(params)},
                        {"suite", suite},
                        {"checks", std::move(checks)},
                        {"pass", all}};
}

}  // namespace linz
