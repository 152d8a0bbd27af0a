#include "ineq/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ineq {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

json json_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string class_label(const ConvexityClass& cls) {
  if (cls.kind == ClassKind::SConvexSecondSense)
    return to_string(cls.kind) + "(s=" + format_double(cls.s) + ")";
  return to_string(cls.kind);
}

}  // namespace

json to_json(const CertificationResult& cert) {
  json j;
  j["class"] = to_string(cert.cls.kind);
  if (cert.cls.kind == ClassKind::SConvexSecondSense) j["s"] = cert.cls.s;
  j["check"] = cert.check == CertCheck::ClassInequality ? "class-inequality" : "nonnegativity";
  j["grid"] = {{"x_nodes", cert.grid.x_nodes},
               {"y_nodes", cert.grid.y_nodes},
               {"lambda_nodes", cert.grid.lambda_nodes}};
  j["max_violation"] = json_or_null(cert.max_violation);
  j["verdict"] = cert.certified ? "certified" : "refuted";
  if (cert.witness) {
    j["witness"] = {{"x", (*cert.witness)[0]}, {"y", (*cert.witness)[1]},
                    {"lambda", (*cert.witness)[2]}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const BetaTerm& term) {
  return json{{"m", term.m}, {"n", term.n}, {"coefficient", term.coefficient}};
}

json to_json(const VerificationReport& report) {
  json j;
  j["problem"] = {{"function", report.problem.function_id},
                  {"a", report.problem.a},
                  {"b", report.problem.b},
                  {"p", report.problem.p},
                  {"q", report.problem.q},
                  {"s", report.problem.s ? json(*report.problem.s) : json(nullptr)}};
  j["formula_id"] = report.formula_id;
  j["lhs"] = json_or_null(report.lhs);
  j["lhs_error"] = json_or_null(report.lhs_error);
  j["rhs"] = json_or_null(report.rhs);
  j["rhs_error"] = report.rhs_error ? json(*report.rhs_error) : json(nullptr);
  j["slack"] = json_or_null(report.slack);
  j["ratio"] = report.ratio ? json(*report.ratio) : json(nullptr);
  j["verdict"] = to_string(report.verdict);
  j["certifications"] = json::array();
  for (const auto& cert : report.certifications) j["certifications"].push_back(to_json(cert));
  j["beta_terms"] = json::array();
  for (const auto& term : report.beta_terms) j["beta_terms"].push_back(to_json(term));
  j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

json to_json(const FunctionSpec& spec) {
  json j;
  j["id"] = spec.id;
  j["kind"] = rule_kind_name(spec.rule);
  j["scale"] = spec.scale;
  j["domain"] = {spec.domain[0], spec.domain[1]};
  j["classes"] = json::array();
  for (const auto& cls : spec.declared_classes) j["classes"].push_back(class_label(cls));
  j["monotonicity"] = to_string(spec.monotonicity);
  j["symmetric"] = spec.symmetric_about_midpoint ? json(*spec.symmetric_about_midpoint)
                                                 : json(nullptr);
  return j;
}

json to_json(const FalsificationSummary& summary) {
  json j;
  j["class"] = to_string(summary.kind);
  j["trials"] = summary.trials;
  j["holds"] = summary.holds;
  j["violated"] = summary.violated;
  j["inconclusive"] = summary.inconclusive;
  j["seed"] = summary.seed;
  j["min_slack"] = std::isfinite(summary.min_slack) ? json(summary.min_slack) : json(nullptr);
  j["min_slack_trial"] = summary.min_slack_trial ? json(*summary.min_slack_trial) : json(nullptr);
  j["violations"] = json::array();
  for (int idx : summary.violated_trials) j["violations"].push_back(to_json(summary.reports[idx]));
  return j;
}

json report_document(const std::string& command, json config,
                     const std::vector<VerificationReport>& reports) {
  json j;
  j["command"] = command;
  j["config"] = std::move(config);
  j["reports"] = json::array();
  int holds = 0, violated = 0, inconclusive = 0;
  for (const auto& report : reports) {
    j["reports"].push_back(to_json(report));
    switch (report.verdict) {
      case Verdict::Holds: ++holds; break;
      case Verdict::Violated: ++violated; break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
  }
  j["summary"] = {{"holds", holds}, {"violated", violated}, {"inconclusive", inconclusive}};
  return j;
}

namespace {

std::string csv_field_double(double v) {
  return std::isfinite(v) ? format_double(v) : "";
}

std::string csv_field_opt(const std::optional<double>& v) {
  return v ? format_double(*v) : "";
}

}  // namespace

std::string reports_to_csv(const std::string& command,
                           const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "command,function,formula,a,b,p,q,s,lhs,lhs_error,rhs,slack,ratio,verdict,certified\n";
  for (const auto& r : reports) {
    const bool certified =
        !r.certifications.empty() &&
        std::all_of(r.certifications.begin(), r.certifications.end(),
                    [](const CertificationResult& c) { return c.certified; });
    out << command << ',' << r.problem.function_id << ',' << r.formula_id << ','
        << format_double(r.problem.a) << ',' << format_double(r.problem.b) << ','
        << format_double(r.problem.p) << ',' << format_double(r.problem.q) << ','
        << csv_field_opt(r.problem.s) << ',' << csv_field_double(r.lhs) << ','
        << csv_field_double(r.lhs_error) << ',' << csv_field_double(r.rhs) << ','
        << csv_field_double(r.slack) << ',' << csv_field_opt(r.ratio) << ','
        << to_string(r.verdict) << ','
        << (r.certifications.empty() ? "" : (certified ? "yes" : "no")) << '\n';
  }
  return out.str();
}

std::string catalog_to_csv(const std::vector<FunctionSpec>& specs) {
  std::ostringstream out;
  out << "id,kind,domain_lo,domain_hi,classes,monotonicity,symmetric\n";
  for (const auto& spec : specs) {
    out << spec.id << ',' << rule_kind_name(spec.rule) << ',' << format_double(spec.domain[0])
        << ',' << format_double(spec.domain[1]) << ',';
    std::string classes;
    for (const auto& cls : spec.declared_classes) {
      if (!classes.empty()) classes += ';';
      classes += class_label(cls);
    }
    out << classes << ',' << to_string(spec.monotonicity) << ','
        << (spec.symmetric_about_midpoint ? (*spec.symmetric_about_midpoint ? "yes" : "no") : "")
        << '\n';
  }
  return out.str();
}

namespace {

void append_row(std::ostringstream& out, const std::vector<std::string>& row,
                const std::vector<std::size_t>& widths) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    out << row[i];
    if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size() + 2, ' ');
  }
  out << '\n';
}

std::string render_table(std::vector<std::vector<std::string>> rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : rows) append_row(out, row, widths);
  return out.str();
}

std::string short_double(double v) {
  if (!std::isfinite(v)) return "-";
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"function", "formula", "a", "b", "p", "q", "s", "lhs", "rhs", "slack", "ratio",
                  "verdict"});
  for (const auto& r : reports) {
    rows.push_back({r.problem.function_id, r.formula_id, short_double(r.problem.a),
                    short_double(r.problem.b), short_double(r.problem.p),
                    short_double(r.problem.q), r.problem.s ? short_double(*r.problem.s) : "-",
                    short_double(r.lhs), short_double(r.rhs), short_double(r.slack),
                    r.ratio ? short_double(*r.ratio) : "-", to_string(r.verdict)});
  }
  return render_table(std::move(rows));
}

std::string catalog_to_table(const std::vector<FunctionSpec>& specs) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "kind", "domain", "classes", "monotonicity", "symmetric"});
  for (const auto& spec : specs) {
    std::string classes;
    for (const auto& cls : spec.declared_classes) {
      if (!classes.empty()) classes += ", ";
      classes += class_label(cls);
    }
    rows.push_back({spec.id, rule_kind_name(spec.rule),
                    "[" + short_double(spec.domain[0]) + ", " + short_double(spec.domain[1]) + "]",
                    classes.empty() ? "-" : classes, to_string(spec.monotonicity),
                    spec.symmetric_about_midpoint ? (*spec.symmetric_about_midpoint ? "yes" : "no")
                                                  : "-"});
  }
  return render_table(std::move(rows));
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  bool any_violated = false;
  bool any_inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated) any_violated = true;
    if (r.verdict == Verdict::Inconclusive) any_inconclusive = true;
  }
  if (any_violated) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

}  // namespace ineq
