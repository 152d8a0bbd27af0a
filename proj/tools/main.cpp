// Command-line surface for the inequality verifier: verify, identity, sweep,
// falsify and catalog subcommands with json/csv/table output.
//
// Exit codes: 0 every check holds, 1 any violation, 2 any inconclusive
// result (and no violation), 3 usage or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ineq/report.hpp"
#include "ineq/verifier.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 3;

struct OutputOpts {
  std::string format = "table";
  std::string out_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the report to this path instead of stdout");
}

int deliver(const OutputOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(opts.out_path);
  if (!file) {
    std::cerr << "error: cannot open output path '" << opts.out_path << "'\n";
    return kExitUsage;
  }
  file << text;
  return 0;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("INEQ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("INEQ_SEED", "not a valid unsigned integer");
    }
  }
  return 0;
}

ineq::ConvexityClass resolve_class(const std::string& name, const std::optional<double>& s) {
  const auto kind = ineq::parse_class_kind(name);
  if (!kind) throw CLI::ValidationError("--class", "unknown class '" + name + "'");
  if (*kind == ineq::ClassKind::SConvexSecondSense) {
    if (!s) throw CLI::ValidationError("--s", "required when --class s-convex");
    if (!(*s > 0.0 && *s <= 1.0)) throw CLI::ValidationError("--s", "must lie in (0, 1]");
    return ineq::ConvexityClass::s_convex(*s);
  }
  if (s) throw CLI::ValidationError("--s", "only valid with --class s-convex");
  return ineq::ConvexityClass{*kind, 1.0};
}

const ineq::FunctionSpec& resolve_function(const std::string& id) {
  const ineq::FunctionSpec* f = ineq::find_function(id);
  if (f == nullptr) throw CLI::ValidationError("--fn", "unknown function id '" + id + "'");
  return *f;
}

int emit_reports(const OutputOpts& opts, const std::string& command, json config,
                 const std::vector<ineq::VerificationReport>& reports,
                 const json* extra_summary = nullptr) {
  std::string text;
  if (opts.format == "json") {
    json doc = ineq::report_document(command, std::move(config), reports);
    if (extra_summary != nullptr) doc["summary"].update(*extra_summary);
    text = doc.dump(2) + "\n";
  } else if (opts.format == "csv") {
    text = ineq::reports_to_csv(command, reports);
  } else {
    text = ineq::reports_to_table(reports);
  }
  const int rc = deliver(opts, text);
  return rc != 0 ? rc : ineq::exit_code_for(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification and falsification of weighted-product integral "
               "inequalities over generalized convexity classes"};
  app.require_subcommand(1);
  // Flat key=value lines, qualified by subcommand: verify.fn=exp mirrors
  // `verify --fn exp`. Given before the subcommand: ineq --config FILE verify.
  app.set_config("--config", "", "Key=value file mirroring the flags (keys like verify.fn)");

  // ---- verify -------------------------------------------------------------
  OutputOpts verify_out;
  std::string verify_fn, verify_class;
  std::optional<double> verify_s;
  double verify_a = 0.0, verify_b = 1.0, verify_p = 1.0, verify_q = 1.0;
  ineq::ToleranceSpec verify_tol;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check one inequality instance");
  verify_cmd->add_option("--fn", verify_fn, "Catalog function id")->required();
  verify_cmd->add_option("--class", verify_class, "Class: s-convex, convex, quasi, p, q")
      ->required();
  verify_cmd->add_option("--s", verify_s, "s parameter (s-convex only)");
  verify_cmd->add_option("--a", verify_a, "Left endpoint")->required();
  verify_cmd->add_option("--b", verify_b, "Right endpoint")->required();
  verify_cmd->add_option("--p", verify_p, "Left weight exponent")->required();
  verify_cmd->add_option("--q", verify_q, "Right weight exponent")->required();
  verify_cmd->add_option("--atol", verify_tol.absolute, "Quadrature absolute tolerance");
  verify_cmd->add_option("--rtol", verify_tol.relative, "Quadrature relative tolerance");
  add_output_opts(verify_cmd, verify_out);

  // ---- identity -----------------------------------------------------------
  OutputOpts identity_out;
  std::string identity_fn;
  double identity_a = 0.0, identity_b = 1.0, identity_p = 1.0, identity_q = 1.0;
  ineq::ToleranceSpec identity_tol;
  CLI::App* identity_cmd =
      app.add_subcommand("identity", "Check the x-form vs t-form change-of-variables identity");
  identity_cmd->add_option("--fn", identity_fn, "Catalog function id")->required();
  identity_cmd->add_option("--a", identity_a, "Left endpoint")->required();
  identity_cmd->add_option("--b", identity_b, "Right endpoint")->required();
  identity_cmd->add_option("--p", identity_p, "Left weight exponent")->required();
  identity_cmd->add_option("--q", identity_q, "Right weight exponent")->required();
  identity_cmd->add_option("--atol", identity_tol.absolute, "Quadrature absolute tolerance");
  identity_cmd->add_option("--rtol", identity_tol.relative, "Quadrature relative tolerance");
  add_output_opts(identity_cmd, identity_out);

  // ---- sweep --------------------------------------------------------------
  OutputOpts sweep_out;
  std::vector<std::string> sweep_fns;
  std::string sweep_class;
  std::vector<double> sweep_p, sweep_q, sweep_s;
  double sweep_a = 0.0, sweep_b = 1.0;
  ineq::ToleranceSpec sweep_tol;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Verify across parameter grids");
  sweep_cmd->add_option("--fns", sweep_fns, "Comma-separated catalog function ids")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--class", sweep_class,
                        "Restrict to one class (default: every declared class)");
  sweep_cmd->add_option("--p-grid", sweep_p, "Comma-separated p values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--q-grid", sweep_q, "Comma-separated q values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--s-grid", sweep_s, "Comma-separated s values (s-convex sweeps)")
      ->delimiter(',');
  sweep_cmd->add_option("--a", sweep_a, "Left endpoint");
  sweep_cmd->add_option("--b", sweep_b, "Right endpoint");
  sweep_cmd->add_option("--atol", sweep_tol.absolute, "Quadrature absolute tolerance");
  sweep_cmd->add_option("--rtol", sweep_tol.relative, "Quadrature relative tolerance");
  add_output_opts(sweep_cmd, sweep_out);

  // ---- falsify ------------------------------------------------------------
  OutputOpts falsify_out;
  std::string falsify_class;
  int falsify_trials = 100;
  std::optional<std::uint64_t> falsify_seed;
  ineq::FalsificationRanges falsify_ranges;
  bool falsify_ranges_given = false;
  CLI::App* falsify_cmd =
      app.add_subcommand("falsify", "Seeded random counterexample search");
  falsify_cmd->add_option("--class", falsify_class, "Class: s-convex, convex, quasi, p, q")
      ->required();
  falsify_cmd->add_option("--trials", falsify_trials, "Number of trials")->capture_default_str();
  falsify_cmd->add_option("--seed", falsify_seed, "Seed (default: INEQ_SEED env var, else 0)");
  const auto add_range = [&](const char* flag, std::array<double, 2>& target, const char* help) {
    falsify_cmd
        ->add_option_function<std::vector<double>>(
            flag,
            [&target, &falsify_ranges_given](const std::vector<double>& v) {
              if (v.size() != 2) throw CLI::ValidationError("range", "expected lo,hi");
              target = {v[0], v[1]};
              falsify_ranges_given = true;
            },
            help)
        ->delimiter(',');
  };
  add_range("--a-range", falsify_ranges.a_range, "Range for the left endpoint (lo,hi)");
  add_range("--width-range", falsify_ranges.width_range, "Range for b - a (lo,hi)");
  add_range("--p-range", falsify_ranges.p_range, "Range for p (lo,hi)");
  add_range("--q-range", falsify_ranges.q_range, "Range for q (lo,hi)");
  add_range("--s-range", falsify_ranges.s_range, "Range for s (lo,hi; s-convex only)");
  add_output_opts(falsify_cmd, falsify_out);

  // ---- catalog ------------------------------------------------------------
  OutputOpts catalog_out;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List the built-in functions");
  add_output_opts(catalog_cmd, catalog_out);

  try {
    app.parse(argc, argv);

    if (verify_cmd->parsed()) {
      const auto cls = resolve_class(verify_class, verify_s);
      const auto& f = resolve_function(verify_fn);
      const auto report = ineq::verify(f, cls, verify_a, verify_b, verify_p, verify_q, verify_tol);
      json config{{"fn", verify_fn},  {"class", verify_class},
                  {"s", verify_s ? json(*verify_s) : json(nullptr)},
                  {"a", verify_a},    {"b", verify_b},
                  {"p", verify_p},    {"q", verify_q},
                  {"atol", verify_tol.absolute}, {"rtol", verify_tol.relative}};
      return emit_reports(verify_out, "verify", std::move(config), {report});
    }

    if (identity_cmd->parsed()) {
      const auto& f = resolve_function(identity_fn);
      const auto report =
          ineq::check_identity(f, identity_a, identity_b, identity_p, identity_q, identity_tol);
      json config{{"fn", identity_fn}, {"a", identity_a}, {"b", identity_b},
                  {"p", identity_p},   {"q", identity_q},
                  {"atol", identity_tol.absolute}, {"rtol", identity_tol.relative}};
      return emit_reports(identity_out, "identity", std::move(config), {report});
    }

    if (sweep_cmd->parsed()) {
      ineq::SweepConfig config;
      config.function_ids = sweep_fns;
      if (!sweep_class.empty()) {
        const auto kind = ineq::parse_class_kind(sweep_class);
        if (!kind) throw CLI::ValidationError("--class", "unknown class '" + sweep_class + "'");
        config.class_filter = *kind;
      }
      config.p_grid = sweep_p;
      config.q_grid = sweep_q;
      config.s_grid = sweep_s;
      config.interval = {sweep_a, sweep_b};
      config.tolerance = sweep_tol;
      const auto reports = ineq::sweep(config);
      json config_json{{"fns", sweep_fns},
                       {"class", sweep_class.empty() ? json(nullptr) : json(sweep_class)},
                       {"p_grid", sweep_p},
                       {"q_grid", sweep_q},
                       {"s_grid", sweep_s},
                       {"a", sweep_a},
                       {"b", sweep_b}};
      return emit_reports(sweep_out, "sweep", std::move(config_json), reports);
    }

    if (falsify_cmd->parsed()) {
      const auto kind = ineq::parse_class_kind(falsify_class);
      if (!kind) throw CLI::ValidationError("--class", "unknown class '" + falsify_class + "'");
      if (!falsify_ranges_given)
        falsify_ranges = ineq::FalsificationRanges::defaults_for(*kind);
      const std::uint64_t seed = resolve_seed(falsify_seed);
      const auto summary = ineq::falsify(*kind, falsify_ranges, falsify_trials, seed);

      // The report list carries the violations plus the minimum-slack trial;
      // the counts live in the summary object.
      std::vector<ineq::VerificationReport> highlighted;
      for (int idx : summary.violated_trials) highlighted.push_back(summary.reports[idx]);
      if (summary.min_slack_trial) highlighted.push_back(summary.reports[*summary.min_slack_trial]);

      json config{{"class", falsify_class}, {"trials", falsify_trials}, {"seed", seed},
                  {"a_range", falsify_ranges.a_range},
                  {"width_range", falsify_ranges.width_range},
                  {"p_range", falsify_ranges.p_range},
                  {"q_range", falsify_ranges.q_range},
                  {"s_range", falsify_ranges.s_range}};
      const json summary_json = ineq::to_json(summary);

      if (falsify_out.format == "json") {
        json doc = ineq::report_document("falsify", std::move(config), highlighted);
        doc["summary"].update(summary_json);
        const int rc = deliver(falsify_out, doc.dump(2) + "\n");
        if (rc != 0) return rc;
      } else if (falsify_out.format == "csv") {
        const int rc = deliver(falsify_out, ineq::reports_to_csv("falsify", summary.reports));
        if (rc != 0) return rc;
      } else {
        std::ostringstream text;
        text << "class=" << ineq::to_string(summary.kind) << " trials=" << summary.trials
             << " holds=" << summary.holds << " violated=" << summary.violated
             << " inconclusive=" << summary.inconclusive
             << " min_slack=" << ineq::format_double(summary.min_slack) << "\n";
        if (!highlighted.empty()) text << ineq::reports_to_table(highlighted);
        const int rc = deliver(falsify_out, text.str());
        if (rc != 0) return rc;
      }
      if (summary.violated > 0) return 1;
      if (summary.inconclusive > 0) return 2;
      return 0;
    }

    // catalog
    const auto& specs = ineq::builtin_catalog();
    std::string text;
    if (catalog_out.format == "json") {
      json doc;
      doc["command"] = "catalog";
      doc["functions"] = json::array();
      for (const auto& spec : specs) doc["functions"].push_back(ineq::to_json(spec));
      text = doc.dump(2) + "\n";
    } else if (catalog_out.format == "csv") {
      text = ineq::catalog_to_csv(specs);
    } else {
      text = ineq::catalog_to_table(specs);
    }
    return deliver(catalog_out, text);

  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);  // help text, exit 0
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
