#include "ineq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ineq {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (abscissae and weights from Piessens et al.).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod abscissae plus the centre.
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  long index;
  bool active;
};

struct WorstFirst {
  // Largest error first; lower insertion index wins ties.
  bool operator()(const std::pair<double, long>& a, const std::pair<double, long>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  }
};

}  // namespace

PanelRule kronrod15(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const auto sample = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw EvaluationError("non-finite integrand value", x);
    return v;
  };

  const double fc = sample(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair_sum = sample(centre - dx) + sample(centre + dx);
    kronrod += kWgk[i] * pair_sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair_sum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, gauss, std::abs(kronrod - gauss)};
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           ToleranceSpec tol, GradeSpec grade, int max_subdivisions) {
  if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");
  if (!(tol.absolute > 0.0) || !(tol.relative > 0.0))
    throw std::invalid_argument("integrate: tolerances must be positive");

  // Initial mesh: geometric refinement (ratio 1/4) toward graded endpoints.
  std::vector<double> breaks{lo};
  const double width = hi - lo;
  if (grade.left_depth > 0 || grade.right_depth > 0) {
    const double split = grade.right_depth > 0 ? (grade.left_depth > 0 ? lo + 0.5 * width : lo) : hi;
    for (int k = grade.left_depth; k >= 1; --k) breaks.push_back(lo + (split - lo) * std::pow(0.25, k));
    if (grade.left_depth > 0 && grade.right_depth > 0) breaks.push_back(split);
    for (int k = 1; k <= grade.right_depth; ++k) breaks.push_back(hi - (hi - split) * std::pow(0.25, k));
  }
  breaks.push_back(hi);

  std::vector<Panel> panels;
  std::priority_queue<std::pair<double, long>, std::vector<std::pair<double, long>>, WorstFirst> worst;
  double total_value = 0.0;
  double total_error = 0.0;

  const auto push_panel = [&](double a, double b) {
    const PanelRule r = kronrod15(f, a, b);
    const long idx = static_cast<long>(panels.size());
    panels.push_back({a, b, r.kronrod, r.error, idx, true});
    worst.push({r.error, idx});
    total_value += r.kronrod;
    total_error += r.error;
  };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) push_panel(breaks[i], breaks[i + 1]);

  const auto target = [&] { return std::max(tol.absolute, tol.relative * std::abs(total_value)); };

  int subdivisions = 0;
  while (total_error > target() && subdivisions < max_subdivisions && !worst.empty()) {
    // Worst panel first; stale queue entries are skipped.
    const auto [err, idx] = worst.top();
    worst.pop();
    Panel& parent = panels[idx];
    if (!parent.active || parent.error != err) continue;
    const double mid = 0.5 * (parent.lo + parent.hi);
    if (mid <= parent.lo || mid >= parent.hi) continue;  // cannot split further
    parent.active = false;
    total_value -= parent.value;
    total_error -= parent.error;
    const double a = parent.lo, b = parent.hi;
    push_panel(a, mid);
    push_panel(mid, b);
    ++subdivisions;
  }

  // Canonical left-to-right summation keeps the reported value independent
  // of the processing schedule above.
  std::vector<const Panel*> leaves;
  leaves.reserve(panels.size());
  for (const Panel& p : panels)
    if (p.active) leaves.push_back(&p);
  std::sort(leaves.begin(), leaves.end(),
            [](const Panel* a, const Panel* b) { return a->lo < b->lo; });

  QuadratureResult out;
  out.subdivisions = subdivisions;
  for (const Panel* p : leaves) {
    out.value += p->value;
    out.error_estimate += p->error;
  }
  out.converged = out.error_estimate <= std::max(tol.absolute, tol.relative * std::abs(out.value));
  return out;
}

namespace {

void validate(const IntegralProblem& problem) {
  if (!(problem.a < problem.b)) throw std::invalid_argument("IntegralProblem: requires a < b");
  if (!(problem.p > 0.0) || !(problem.q > 0.0))
    throw std::invalid_argument("IntegralProblem: requires p > 0 and q > 0");
  if (!problem.f) throw std::invalid_argument("IntegralProblem: missing function");
}

}  // namespace

QuadratureResult integrate_weighted(const IntegralProblem& problem, ToleranceSpec tol) {
  validate(problem);
  const double a = problem.a, b = problem.b, p = problem.p, q = problem.q;
  const auto& f = problem.f;
  const auto integrand = [&, a, b, p, q](double x) {
    return std::pow(x - a, p) * std::pow(b - x, q) * f(x) * f(a + b - x);
  };
  const GradeSpec grade{p < 1.0 ? kGradeDepth : 0, q < 1.0 ? kGradeDepth : 0};
  return integrate(integrand, a, b, tol, grade);
}

QuadratureResult integrate_t_form(const IntegralProblem& problem, ToleranceSpec tol) {
  validate(problem);
  const double a = problem.a, b = problem.b, p = problem.p, q = problem.q;
  const auto& f = problem.f;
  const auto integrand = [&, a, b, p, q](double t) {
    return std::pow(1.0 - t, p) * std::pow(t, q) * f(t * a + (1.0 - t) * b) * f((1.0 - t) * a + t * b);
  };
  const double prefactor = std::pow(b - a, p + q + 1.0);
  // In t-space the q weight sits at t = 0 and the p weight at t = 1.
  const GradeSpec grade{q < 1.0 ? kGradeDepth : 0, p < 1.0 ? kGradeDepth : 0};
  // Aim the core at the scaled value so the returned tolerances line up.
  ToleranceSpec core_tol{std::max(tol.absolute / prefactor, 1e-300), tol.relative};
  QuadratureResult r = integrate(integrand, 0.0, 1.0, core_tol, grade);
  r.value *= prefactor;
  r.error_estimate *= prefactor;
  return r;
}

}  // namespace ineq
