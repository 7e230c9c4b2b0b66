// bessel-linz: exact connection/linearization coefficient tables for Bessel
// polynomials, positivity certificates, and Monte Carlo checks of the
// corresponding Student-t / inverse-Gamma mixture identities.

#include <linz/table_io.hpp>
#include <linz/util.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace linz;

struct RunConfig {
  std::string format = "json";
  std::string out;  // empty = stdout
  bool suppress_zeros = false;
  bool allow_outside = false;
};

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out, "Write output to a file instead of stdout");
  cmd->add_flag("--suppress-zeros", cfg.suppress_zeros, "Omit zero entries from tables");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw CLI::RuntimeError("cannot open output file: " + cfg.out, 1);
  f << text;
}

void emit_json(const RunConfig& cfg, const nlohmann::json& j) { emit(cfg, j.dump(2) + "\n"); }

Rational parse_weight(const std::string& s, bool allow_outside) {
  Rational a;
  try {
    a = Rational::parse(s);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--a", e.what());
  }
  if (!allow_outside && (a < Rational(0) || a > Rational(1)))
    throw CLI::ValidationError("--a", "a=" + a.str() +
                                          " outside [0,1]; positivity only holds there "
                                          "(pass --allow-outside to compute anyway)");
  return a;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& parts, const char* flag) {
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& p : parts) {
    try {
      out.push_back(Rational::parse(p));
    } catch (const std::exception& e) {
      throw CLI::ValidationError(flag, e.what());
    }
  }
  return out;
}

void emit_table(const RunConfig& cfg, const CoeffTable& table, const std::string& command,
                nlohmann::json params) {
  if (cfg.format == "csv")
    emit(cfg, table_to_csv(table, cfg.suppress_zeros));
  else
    emit_json(cfg, table_to_json(table, command, std::move(params), cfg.suppress_zeros));
}

int run_verify(const std::string& suite, unsigned max_n, bool max_n_set, unsigned max_m,
               bool max_m_set, unsigned n, unsigned m, const std::string& a_str,
               std::size_t samples, std::uint64_t seed, bool profile, const RunConfig& cfg) {
  auto bound = [&](unsigned dflt) { return max_n_set ? max_n : dflt; };
  auto bound_m = [&](unsigned dflt) { return max_m_set ? max_m : dflt; };

  std::vector<CheckResult> results;
  auto run_suite = [&](const std::string& s) {
    if (s == "basis") {
      results.push_back(verify_basis(bound(50)));
      results.push_back(verify_carlitz(bound(60)));
    } else if (s == "theorem1") {
      results.push_back(verify_connection(bound(30)));
    } else if (s == "theorem2") {
      results.push_back(verify_linearization_equal(bound(25)));
    } else if (s == "theorem3") {
      results.push_back(verify_linearization_general(bound(15), bound_m(15), profile));
    } else if (s == "theorem4") {
      results.push_back(verify_product(20, 4, 5, seed));
    } else if (s == "lemma31") {
      results.push_back(verify_gamma_expansion(bound(20)));
    } else if (s == "lemma32") {
      results.push_back(verify_half_integer_recursion(bound(15)));
    } else if (s == "lemma33") {
      results.push_back(verify_beta_recursion_consistency(bound(12), bound_m(12)));
    } else if (s == "fourier") {
      results.push_back(verify_fourier(bound(8), bound_m(8)));
    } else if (s == "montecarlo") {
      Rational a = parse_weight(a_str, false);
      std::vector<McConfig> configs = {{n, m, a}};
      std::vector<std::uint64_t> seeds = {seed, seed + 1, seed + 2};
      results.push_back(verify_montecarlo_student(configs, samples, seeds));
      results.push_back(verify_montecarlo_invgamma(configs, samples, seeds));
    }
  };

  if (suite == "all") {
    for (const char* s : {"basis", "theorem1", "theorem2", "theorem3", "theorem4", "lemma31",
                          "lemma32", "lemma33", "fourier", "montecarlo"})
      run_suite(s);
  } else {
    run_suite(suite);
  }

  nlohmann::json params{{"suite", suite}};
  if (max_n_set) params["max_n"] = max_n;
  if (max_m_set) params["max_m"] = max_m;
  if (suite == "montecarlo" || suite == "all") {
    params["n"] = n;
    params["m"] = m;
    params["a"] = a_str;
    params["samples"] = samples;
    params["seed"] = seed;
  }
  emit_json(cfg, check_results_to_json(suite, results, std::move(params)));
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bessel-polynomial coefficient tables and mixture checks"};
  app.require_subcommand(1);

  RunConfig cfg;

  // qpoly
  unsigned qpoly_n = 0;
  auto* qpoly = app.add_subcommand("qpoly", "Print the coefficients of q_n");
  qpoly->add_option("n", qpoly_n, "Degree")->required();
  add_output_options(qpoly, cfg);

  // connection
  unsigned conn_n = 0;
  std::string conn_a;
  auto* conn = app.add_subcommand("connection", "Connection coefficients c_k^{(n)}(a)");
  conn->add_option("n", conn_n, "Degree")->required();
  conn->add_option("--a", conn_a, "Evaluate at rational a (\"p/q\"); omit for symbolic output");
  conn->add_flag("--allow-outside", cfg.allow_outside, "Allow a outside [0,1]");
  add_output_options(conn, cfg);

  // linearize
  unsigned lin_n = 0, lin_m = 0;
  std::string lin_a, lin_mode = "oracle";
  auto* lin = app.add_subcommand("linearize", "Linearization coefficients beta_k^{(n,m)}(a)");
  lin->add_option("n", lin_n, "First degree")->required();
  lin->add_option("m", lin_m, "Second degree")->required();
  lin->add_option("--a", lin_a, "Evaluate at rational a (\"p/q\"); omit for symbolic output");
  lin->add_option("--mode", lin_mode, "Computation route")
      ->check(CLI::IsMember({"recursion", "oracle", "both"}))
      ->capture_default_str();
  lin->add_flag("--allow-outside", cfg.allow_outside, "Allow a outside [0,1]");
  bool lin_profile = false;
  lin->add_flag("--profile", lin_profile, "Report wall time to stderr");
  add_output_options(lin, cfg);

  // product
  std::vector<unsigned> prod_degrees;
  std::vector<std::string> prod_weights;
  auto* prod = app.add_subcommand("product", "Multi-factor product expansion");
  prod->add_option("--degrees", prod_degrees, "Factor degrees n_1,...,n_r")
      ->required()
      ->delimiter(',');
  prod->add_option("--weights", prod_weights, "Positive rational weights summing to 1")
      ->required()
      ->delimiter(',');
  add_output_options(prod, cfg);

  // dstat
  unsigned dstat_f1 = 1, dstat_f2 = 1;
  double dstat_theta = 0.0;
  bool dstat_normalized = false;
  auto* dstat = app.add_subcommand(
      "dstat", "Mixture law of t1 sin(theta) - t2 cos(theta) for odd degrees of freedom");
  dstat->add_option("--f1", dstat_f1, "Degrees of freedom of t1 (odd)")->required();
  dstat->add_option("--f2", dstat_f2, "Degrees of freedom of t2 (odd)")->required();
  dstat->add_option("--theta", dstat_theta, "Angle in [0, pi/2]")->required();
  dstat->add_flag("--normalized", dstat_normalized,
                  "Rescale the statistic by 1/(sin+cos) so the weights are convex");
  add_output_options(dstat, cfg);

  // mc-check
  std::string mc_kind = "student", mc_a = "1/2";
  unsigned mc_n = 1, mc_m = 1;
  std::size_t mc_samples = 1000000;
  std::uint64_t mc_seed = 42;
  auto* mc = app.add_subcommand("mc-check", "Single Monte Carlo KS run");
  mc->add_option("--kind", mc_kind, "student | invgamma")
      ->check(CLI::IsMember({"student", "invgamma"}))
      ->capture_default_str();
  mc->add_option("--n", mc_n, "First degree index")->capture_default_str();
  mc->add_option("--m", mc_m, "Second degree index")->capture_default_str();
  mc->add_option("--a", mc_a, "Rational mixing weight")->capture_default_str();
  mc->add_option("--samples", mc_samples, "Sample count (>= 10^4)")->capture_default_str();
  mc->add_option("--seed", mc_seed, "RNG seed")->capture_default_str();
  add_output_options(mc, cfg);

  // verify
  std::string ver_suite;
  unsigned ver_max_n = 0, ver_max_m = 0, ver_n = 1, ver_m = 1;
  std::string ver_a = "1/2";
  std::size_t ver_samples = 1000000;
  std::uint64_t ver_seed = 42;
  bool ver_profile = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite; exit 0 iff it passes");
  ver->add_option("suite", ver_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"basis", "theorem1", "theorem2", "theorem3", "theorem4", "lemma31",
                             "lemma32", "lemma33", "fourier", "montecarlo", "all"}));
  auto* opt_max_n = ver->add_option("--max-n", ver_max_n, "Upper bound for n");
  auto* opt_max_m = ver->add_option("--max-m", ver_max_m, "Upper bound for m");
  ver->add_option("--n", ver_n, "Monte Carlo: first degree")->capture_default_str();
  ver->add_option("--m", ver_m, "Monte Carlo: second degree")->capture_default_str();
  ver->add_option("--a", ver_a, "Monte Carlo: rational mixing weight")->capture_default_str();
  ver->add_option("--samples", ver_samples, "Monte Carlo: sample count")->capture_default_str();
  ver->add_option("--seed", ver_seed, "Seed (verify uses seed, seed+1, seed+2)")
      ->capture_default_str();
  ver->add_flag("--profile", ver_profile, "Report per-cell wall time to stderr");
  add_output_options(ver, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*qpoly) {
      UPoly q = q_poly(qpoly_n);
      CoeffTable t;
      t.kind = TableKind::connection;  // rendering only cares about symbolic/numeric
      t.symbolic = false;
      for (unsigned k = 0; k <= static_cast<unsigned>(q.degree()); ++k)
        t.entries.push_back(APoly::constant(q.coeff(k)));
      if (cfg.format == "csv") {
        emit(cfg, table_to_csv(t, cfg.suppress_zeros));
      } else {
        nlohmann::json j = table_to_json(t, "qpoly", {{"n", qpoly_n}}, cfg.suppress_zeros);
        j["coefficients"] = q.coeff_strings();
        j["checks"] = {{"value_at_zero", q.coeff(0).str()}};
        emit_json(cfg, j);
      }
    } else if (*conn) {
      CoeffTable t = connection_table(conn_n);
      nlohmann::json params{{"n", conn_n}, {"a", conn_a.empty() ? "symbolic" : conn_a}};
      if (!conn_a.empty()) t = t.evaluated_at(parse_weight(conn_a, cfg.allow_outside));
      emit_table(cfg, t, "connection", std::move(params));
    } else if (*lin) {
      auto started = std::chrono::steady_clock::now();
      LinMode mode = lin_mode == "recursion" ? LinMode::recursion : LinMode::oracle;
      CoeffTable t = linearization_general(lin_n, lin_m, mode);
      bool modes_agree = true;
      if (lin_mode == "both")
        modes_agree = t.entries == linearization_general(lin_n, lin_m, LinMode::recursion).entries;
      nlohmann::json params{
          {"n", lin_n}, {"m", lin_m}, {"a", lin_a.empty() ? "symbolic" : lin_a}, {"mode", lin_mode}};
      if (!lin_a.empty()) t = t.evaluated_at(parse_weight(lin_a, cfg.allow_outside));
      if (lin_profile) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              started)
                        .count();
        std::cerr << "cell (n=" << lin_n << ",m=" << lin_m << "): " << ms << " ms\n";
      }
      if (cfg.format == "csv") {
        emit(cfg, table_to_csv(t, cfg.suppress_zeros));
      } else {
        nlohmann::json j = table_to_json(t, "linearize", std::move(params), cfg.suppress_zeros);
        if (lin_mode == "both") j["checks"]["modes_agree"] = modes_agree;
        emit_json(cfg, j);
        if (!modes_agree) return 1;
      }
    } else if (*prod) {
      std::vector<Rational> weights = parse_rational_list(prod_weights, "--weights");
      CoeffTable t = product_expansion(prod_degrees, weights);
      nlohmann::json wjson = nlohmann::json::array();
      for (const auto& w : weights) wjson.push_back(w.str());
      emit_table(cfg, t, "product",
                 {{"degrees", prod_degrees}, {"weights", std::move(wjson)}});
    } else if (*dstat) {
      MixtureSpec mix = d_statistic_table(dstat_f1, dstat_f2, dstat_theta, dstat_normalized);
      nlohmann::json params{{"f1", dstat_f1},
                            {"f2", dstat_f2},
                            {"theta", dstat_theta},
                            {"normalized", dstat_normalized}};
      if (cfg.format == "csv") {
        std::ostringstream os;
        os << "k,dof,weight\n";
        for (const auto& c : mix.components)
          os << c.k << "," << 2 * c.k + 1 << "," << c.weight.to_double() << "\n";
        emit(cfg, os.str());
      } else {
        emit_json(cfg, mixture_to_json(mix, "dstat", std::move(params)));
      }
    } else if (*mc) {
      Rational a = parse_weight(mc_a, false);
      KsReport r = mc_kind == "student" ? mc_convolution_check(mc_n, mc_m, a, mc_samples, mc_seed)
                                        : mc_inverse_gamma_check(mc_n, mc_m, a, mc_samples, mc_seed);
      emit_json(cfg, ks_report_to_json(r));
      return r.pass ? 0 : 1;
    } else if (*ver) {
      return run_verify(ver_suite, ver_max_n, opt_max_n->count() > 0, ver_max_m,
                        opt_max_m->count() > 0, ver_n, ver_m, ver_a, ver_samples, ver_seed,
                        ver_profile, cfg);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
