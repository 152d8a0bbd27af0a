#include "ineq/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "ineq/special_fn.hpp"

namespace ineq {

namespace {

void validate(const EndpointData& e, double p, double q, const char* who) {
  if (!(e.a < e.b)) throw std::domain_error(std::string(who) + ": requires a < b");
  if (!(e.fa >= 0.0) || !(e.fb >= 0.0))
    throw std::domain_error(std::string(who) + ": requires f(a) >= 0 and f(b) >= 0");
  if (!(p > 0.0) || !(q > 0.0))
    throw std::domain_error(std::string(who) + ": requires p > 0 and q > 0");
}

// Assemble value = sum coeff_i * beta(m_i, n_i), recording each term.
BoundValue assemble(std::string formula_id, std::initializer_list<BetaTerm> terms) {
  BoundValue out;
  out.formula_id = std::move(formula_id);
  for (const BetaTerm& t : terms) {
    out.beta_terms.push_back(t);
    out.value += t.coefficient * beta(t.m, t.n);
  }
  return out;
}

}  // namespace

BoundValue bound_s_convex(const EndpointData& e, double p, double q, double s) {
  validate(e, p, q, "bound_s_convex");
  if (!(s > 0.0 && s <= 1.0))
    throw std::domain_error("bound_s_convex: requires s in (0, 1]");
  const double half_pref = 0.5 * std::pow(e.b - e.a, p + q + 1.0);
  const double sq = e.fa * e.fa + e.fb * e.fb;
  const double cross = 4.0 * e.fa * e.fb;
  return assemble(formula::kSConvex,
                  {{p + 1.0, 2.0 * s + q + 1.0, half_pref * sq},
                   {q + 1.0, 2.0 * s + p + 1.0, half_pref * sq},
                   {p + s + 1.0, q + s + 1.0, half_pref * cross}});
}

BoundValue bound_convex(const EndpointData& e, double p, double q) {
  BoundValue out = bound_s_convex(e, p, q, 1.0);
  out.formula_id = formula::kConvex;
  return out;
}

BoundValue bound_quasi_convex(const EndpointData& e, double p, double q) {
  validate(e, p, q, "bound_quasi_convex");
  const double m = std::max(e.fa, e.fb);
  const double pref = std::pow(e.b - e.a, p + q + 1.0);
  return assemble(formula::kQuasiConvex, {{p + 1.0, q + 1.0, pref * m * m}});
}

BoundValue bound_p_class(const EndpointData& e, double p, double q) {
  validate(e, p, q, "bound_p_class");
  const double sum = e.fa + e.fb;
  const double pref = std::pow(e.b - e.a, p + q + 1.0);
  return assemble(formula::kPClass, {{p + 1.0, q + 1.0, pref * sum * sum}});
}

BoundValue bound_q_class(const EndpointData& e, double p, double q) {
  validate(e, p, q, "bound_q_class");
  if (!(p > 1.0) || !(q > 1.0))
    throw std::domain_error("bound_q_class: requires p > 1 and q > 1");
  const double half_pref = 0.5 * std::pow(e.b - e.a, p + q + 1.0);
  const double sq = e.fa * e.fa + e.fb * e.fb;
  const double cross = 4.0 * e.fa * e.fb;
  return assemble(formula::kQClass, {{p + 1.0, q - 1.0, half_pref * sq},
                                     {p - 1.0, q + 1.0, half_pref * sq},
                                     {p, q, half_pref * cross}});
}

}  // namespace ineq
