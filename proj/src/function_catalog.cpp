#include "ineq/function_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ineq/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ineq {

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::SConvexSecondSense: return "s-convex";
    case ClassKind::Convex: return "convex";
    case ClassKind::QuasiConvex: return "quasi";
    case ClassKind::PFunction: return "p";
    case ClassKind::QClass: return "q";
  }
  return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view name) {
  if (name == "s-convex") return ClassKind::SConvexSecondSense;
  if (name == "convex") return ClassKind::Convex;
  if (name == "quasi") return ClassKind::QuasiConvex;
  if (name == "p") return ClassKind::PFunction;
  if (name == "q") return ClassKind::QClass;
  return std::nullopt;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::None: return "none";
  }
  return "?";
}

double eval_rule(const FunctionRule& rule, double x) {
  return std::visit(
      [x](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          double acc = 0.0;
          for (std::size_t k = r.coeffs.size(); k-- > 0;) acc = acc * x + r.coeffs[k];
          return acc;
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          return r.coeff * std::pow(x, r.s) + r.offset;
        } else if constexpr (std::is_same_v<T, ExpFn>) {
          return std::exp(x);
        } else if constexpr (std::is_same_v<T, AbsAffine>) {
          return r.slope * std::abs(x - r.center) + r.offset;
        } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          const auto& xs = r.xs;
          const auto& ys = r.ys;
          // End segments extrapolate, keeping convex specs convex on [0, inf).
          std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
          if (hi == 0) hi = 1;
          if (hi == xs.size()) hi = xs.size() - 1;
          const std::size_t lo = hi - 1;
          const double slope = (ys[hi] - ys[lo]) / (xs[hi] - xs[lo]);
          return ys[lo] + slope * (x - xs[lo]);
        } else {
          static_assert(std::is_same_v<T, SinePi>);
          return std::sin(M_PI * x);
        }
      },
      rule);
}

std::string rule_kind_name(const FunctionRule& rule) {
  switch (rule.index()) {
    case 0: return "polynomial";
    case 1: return "power";
    case 2: return "exp";
    case 3: return "abs-affine";
    case 4: return "piecewise-linear";
    default: return "sin-pi";
  }
}

FunctionSpec scaled(const FunctionSpec& spec, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  FunctionSpec out = spec;
  out.scale *= c;
  return out;
}

// ---------------------------------------------------------------------------
// Certification

double class_violation(const FunctionSpec& f, ConvexityClass cls, double x, double y,
                       double lambda) {
  const double mix = f(lambda * x + (1.0 - lambda) * y);
  const double fx = f(x);
  const double fy = f(y);
  switch (cls.kind) {
    case ClassKind::SConvexSecondSense:
      return mix - (std::pow(lambda, cls.s) * fx + std::pow(1.0 - lambda, cls.s) * fy);
    case ClassKind::Convex:
      return mix - (lambda * fx + (1.0 - lambda) * fy);
    case ClassKind::QuasiConvex:
      return mix - std::max(fx, fy);
    case ClassKind::PFunction:
      return mix - (fx + fy);
    case ClassKind::QClass:
      return mix - (fx / lambda + fy / (1.0 - lambda));
  }
  return 0.0;
}

namespace {

bool uses_open_lambda(ClassKind kind) {
  // Open sampling for the s-convex family (weights alpha, beta > 0) and for
  // Q, whose bound diverges at lambda in {0, 1}.
  return kind == ClassKind::SConvexSecondSense || kind == ClassKind::Convex ||
         kind == ClassKind::QClass;
}

bool checks_nonnegativity(ClassKind kind) {
  return kind == ClassKind::PFunction || kind == ClassKind::QClass;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return out;
}

std::vector<double> lambda_grid(ClassKind kind, int n) {
  std::vector<double> out(n);
  if (uses_open_lambda(kind)) {
    for (int k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(k) / (n + 1);
  } else {
    for (int k = 0; k < n; ++k) out[k] = static_cast<double>(k) / (n - 1);
  }
  return out;
}

struct ScanBest {
  double violation = -std::numeric_limits<double>::infinity();
  long index = -1;
  std::array<double, 3> witness{0.0, 0.0, 0.0};
};

// Per-lambda weights on f(x) and f(y) in the class bound, precomputed once
// per scan. Quasi-convex and P bounds do not depend on lambda and are
// handled per (x, y) pair instead.
struct LambdaWeights {
  std::vector<double> wx;
  std::vector<double> wy;
  bool constant_bound = false;
};

LambdaWeights make_weights(ConvexityClass cls, const std::vector<double>& lambdas) {
  LambdaWeights w;
  if (cls.kind == ClassKind::QuasiConvex || cls.kind == ClassKind::PFunction) {
    w.constant_bound = true;
    return w;
  }
  w.wx.resize(lambdas.size());
  w.wy.resize(lambdas.size());
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double lambda = lambdas[k];
    switch (cls.kind) {
      case ClassKind::SConvexSecondSense:
        w.wx[k] = std::pow(lambda, cls.s);
        w.wy[k] = std::pow(1.0 - lambda, cls.s);
        break;
      case ClassKind::Convex:
        w.wx[k] = lambda;
        w.wy[k] = 1.0 - lambda;
        break;
      default:  // QClass
        w.wx[k] = 1.0 / lambda;
        w.wy[k] = 1.0 / (1.0 - lambda);
        break;
    }
  }
  return w;
}

// Worst violation over the (y, lambda) grid for one fixed x. This is the
// serial inner loop shared by both execution policies.
ScanBest scan_row(const FunctionSpec& f, ConvexityClass cls, const LambdaWeights& weights,
                  double x, long ix, const std::vector<double>& ys,
                  const std::vector<double>& lambdas) {
  ScanBest best;
  const double fx = f(x);
  const long row_base = ix * static_cast<long>(ys.size()) * static_cast<long>(lambdas.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const double y = ys[j];
    const double fy = f(y);
    const double pair_bound = cls.kind == ClassKind::QuasiConvex ? std::max(fx, fy) : fx + fy;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      const double lambda = lambdas[k];
      const double mix = f(lambda * x + (1.0 - lambda) * y);
      const double bound =
          weights.constant_bound ? pair_bound : weights.wx[k] * fx + weights.wy[k] * fy;
      const double v = mix - bound;
      if (!std::isfinite(v))
        throw std::runtime_error("certify: non-finite evaluation at x = " + std::to_string(x) +
                                 ", y = " + std::to_string(y) +
                                 ", lambda = " + std::to_string(lambda));
      if (v > best.violation) {
        best.violation = v;
        best.index = row_base + static_cast<long>(j * lambdas.size() + k);
        best.witness = {x, y, lambda};
      }
    }
  }
  return best;
}

void merge_best(ScanBest& into, const ScanBest& candidate) {
  if (candidate.violation > into.violation ||
      (candidate.violation == into.violation && candidate.index < into.index)) {
    into = candidate;
  }
}

ScanBest scan_serial(const FunctionSpec& f, ConvexityClass cls, const std::vector<double>& xs,
                     const std::vector<double>& ys, const std::vector<double>& lambdas) {
  const LambdaWeights weights = make_weights(cls, lambdas);
  ScanBest best;
  for (std::size_t i = 0; i < xs.size(); ++i)
    merge_best(best, scan_row(f, cls, weights, xs[i], static_cast<long>(i), ys, lambdas));
  return best;
}

ScanBest scan_parallel(const FunctionSpec& f, ConvexityClass cls, const std::vector<double>& xs,
                       const std::vector<double>& ys, const std::vector<double>& lambdas) {
  const LambdaWeights weights = make_weights(cls, lambdas);
  std::vector<ScanBest> rows(xs.size());
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      rows[i] = scan_row(f, cls, weights, xs[i], static_cast<long>(i), ys, lambdas);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  // Index-ordered merge reproduces the serial result bit for bit.
  ScanBest best;
  for (const ScanBest& row : rows) merge_best(best, row);
  return best;
}

}  // namespace

CertificationResult certify(const FunctionSpec& f, ConvexityClass cls,
                            std::array<double, 2> interval, GridSpec grid, double tol,
                            Exec exec) {
  if (grid.x_nodes < 3 || grid.y_nodes < 3 || grid.lambda_nodes < 3)
    throw std::invalid_argument("certify: grid needs at least 3 nodes per axis");
  if (!(interval[0] < interval[1])) throw std::invalid_argument("certify: empty interval");
  if (cls.kind == ClassKind::SConvexSecondSense && !(cls.s > 0.0 && cls.s <= 1.0))
    throw std::invalid_argument("certify: s must lie in (0, 1]");

  const auto xs = linspace(interval[0], interval[1], grid.x_nodes);
  const auto ys = linspace(interval[0], interval[1], grid.y_nodes);
  const auto lambdas = lambda_grid(cls.kind, grid.lambda_nodes);

  ScanBest best = exec == Exec::Parallel ? scan_parallel(f, cls, xs, ys, lambdas)
                                         : scan_serial(f, cls, xs, ys, lambdas);

  // The P and Q definitions also require f >= 0; scan the x grid for the
  // worst breach and fold it in as a violation at the degenerate triple.
  if (checks_nonnegativity(cls.kind)) {
    double worst_x = xs[0];
    double worst_fx = f(xs[0]);
    for (double x : xs) {
      const double fx = f(x);
      if (fx < worst_fx) {
        worst_fx = fx;
        worst_x = x;
      }
    }
    if (worst_fx < -tol) {
      ScanBest neg;
      neg.violation = class_violation(f, cls, worst_x, worst_x, 0.5);
      neg.index = -1;  // reported ahead of any grid triple
      neg.witness = {worst_x, worst_x, 0.5};
      merge_best(best, neg);
    }
  }

  CertificationResult out;
  out.cls = cls;
  out.check = CertCheck::ClassInequality;
  out.grid = grid;
  out.max_violation = best.violation;
  out.certified = best.violation <= tol;
  if (!out.certified) out.witness = best.witness;
  return out;
}

CertificationResult certify(const FunctionSpec& f, ConvexityClass cls, GridSpec grid, double tol,
                            Exec exec) {
  return certify(f, cls, f.domain, grid, tol, exec);
}

CertificationResult certify_nonnegative(const FunctionSpec& f, ConvexityClass cls,
                                        std::array<double, 2> interval, GridSpec grid,
                                        double tol) {
  const auto xs = linspace(interval[0], interval[1], grid.x_nodes);
  CertificationResult out;
  out.cls = cls;
  out.check = CertCheck::Nonnegativity;
  out.grid = grid;
  out.max_violation = -std::numeric_limits<double>::infinity();
  double worst_x = xs[0];
  for (double x : xs) {
    const double v = -f(x);  // positive when f(x) < 0
    if (v > out.max_violation) {
      out.max_violation = v;
      worst_x = x;
    }
  }
  out.certified = out.max_violation <= tol;
  if (!out.certified) out.witness = {worst_x, worst_x, 0.5};
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

// Sorted interior breakpoints with the domain endpoints attached.
std::vector<double> random_nodes(Rng& rng, const GeneratorShape& shape, int count) {
  std::vector<double> xs{shape.domain[0]};
  for (int i = 0; i < count - 2; ++i)
    xs.push_back(rng.uniform(shape.domain[0], shape.domain[1]));
  xs.push_back(shape.domain[1]);
  std::sort(xs.begin(), xs.end());
  // Collapse near-duplicate nodes to keep segment slopes finite.
  const double min_gap = 1e-6 * (shape.domain[1] - shape.domain[0]);
  std::vector<double> out{xs.front()};
  for (double x : xs) {
    if (x - out.back() >= min_gap) out.push_back(x);
  }
  if (out.size() < 2) out.push_back(shape.domain[1]);
  return out;
}

Monotonicity monotonicity_of(const std::vector<double>& ys) {
  bool nondecreasing = true, nonincreasing = true;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (ys[i] < ys[i - 1]) nondecreasing = false;
    if (ys[i] > ys[i - 1]) nonincreasing = false;
  }
  if (nondecreasing) return Monotonicity::Increasing;
  if (nonincreasing) return Monotonicity::Decreasing;
  return Monotonicity::None;
}

// Shift up to nonnegative, then scale into the requested value range.
void fit_to_range(std::vector<double>& ys, const GeneratorShape& shape) {
  const double lo = *std::min_element(ys.begin(), ys.end());
  if (lo < 0.0)
    for (double& y : ys) y -= lo;
  const double hi = *std::max_element(ys.begin(), ys.end());
  if (hi > shape.value_hi && hi > 0.0) {
    const double c = shape.value_hi / hi;
    for (double& y : ys) y *= c;
  }
}

FunctionSpec make_piecewise(std::string id, std::vector<double> xs, std::vector<double> ys,
                            const GeneratorShape& shape, ConvexityClass cls) {
  FunctionSpec spec;
  spec.id = std::move(id);
  spec.monotonicity = monotonicity_of(ys);
  spec.rule = PiecewiseLinear{std::move(xs), std::move(ys)};
  spec.domain = shape.domain;
  spec.declared_classes = {cls};
  return spec;
}

// Piecewise-linear with sorted nondecreasing slopes: convex by construction,
// shifted to be nonnegative so it also satisfies the theorems' codomain
// hypothesis.
FunctionSpec generate_convex(std::uint64_t seed, const GeneratorShape& shape,
                             ConvexityClass cls) {
  Rng rng(seed);
  const int count = rng.uniform_int(shape.min_nodes, shape.max_nodes);
  auto xs = random_nodes(rng, shape, count);
  const double span = shape.value_hi - shape.value_lo;
  std::vector<double> slopes(xs.size() - 1);
  for (double& s : slopes) s = rng.uniform(-2.0 * span, 2.0 * span);
  std::sort(slopes.begin(), slopes.end());
  std::vector<double> ys{rng.uniform(shape.value_lo, shape.value_hi)};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    ys.push_back(ys.back() + slopes[i] * (xs[i + 1] - xs[i]));
  fit_to_range(ys, shape);
  return make_piecewise("gen-convex-" + std::to_string(seed), std::move(xs), std::move(ys),
                        shape, cls);
}

// Unimodal-minimum piecewise-linear: decreasing to a valley node, then
// increasing. Quasi-convex by construction.
FunctionSpec generate_quasi(std::uint64_t seed, const GeneratorShape& shape,
                            ConvexityClass cls) {
  Rng rng(seed);
  const int count = rng.uniform_int(shape.min_nodes, shape.max_nodes);
  auto xs = random_nodes(rng, shape, count);
  const int valley = rng.uniform_int(0, static_cast<int>(xs.size()) - 1);
  const double span = shape.value_hi - shape.value_lo;
  std::vector<double> ys(xs.size());
  ys[valley] = rng.uniform(shape.value_lo, shape.value_lo + 0.25 * span);
  for (int i = valley - 1; i >= 0; --i) ys[i] = ys[i + 1] + rng.uniform(0.0, 0.5 * span);
  for (std::size_t i = valley + 1; i < xs.size(); ++i)
    ys[i] = ys[i - 1] + rng.uniform(0.0, 0.5 * span);
  fit_to_range(ys, shape);
  return make_piecewise("gen-quasi-" + std::to_string(seed), std::move(xs), std::move(ys),
                        shape, cls);
}

// Sum of two nonnegative quasi-convex pieces on the merged node set.
FunctionSpec generate_quasi_sum(std::uint64_t seed, const GeneratorShape& shape,
                                ConvexityClass cls) {
  GeneratorShape half = shape;
  half.value_hi = 0.5 * shape.value_hi;
  const FunctionSpec f1 = generate_quasi(Rng::child_seed(seed, 1), half, cls);
  const FunctionSpec f2 = generate_quasi(Rng::child_seed(seed, 2), half, cls);
  const auto& x1 = std::get<PiecewiseLinear>(f1.rule).xs;
  const auto& x2 = std::get<PiecewiseLinear>(f2.rule).xs;
  std::vector<double> xs;
  std::merge(x1.begin(), x1.end(), x2.begin(), x2.end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(f1(x) + f2(x));
  return make_piecewise("gen-p-sum-" + std::to_string(seed), std::move(xs), std::move(ys),
                        shape, cls);
}

// Nonnegative c * x^s + d: the canonical s-convex family.
FunctionSpec generate_s_convex(std::uint64_t seed, const GeneratorShape& shape,
                               ConvexityClass cls) {
  Rng rng(seed);
  FunctionSpec spec;
  spec.id = "gen-s-convex-" + std::to_string(seed);
  spec.rule = PowerLaw{cls.s, rng.uniform(0.0, shape.value_hi), rng.uniform(0.0, shape.value_hi)};
  spec.domain = shape.domain;
  spec.declared_classes = {cls};
  spec.monotonicity = Monotonicity::Increasing;
  return spec;
}

}  // namespace

FunctionSpec generate(ConvexityClass cls, std::uint64_t seed, GeneratorShape shape) {
  if (shape.min_nodes < 3 || shape.max_nodes < shape.min_nodes)
    throw std::invalid_argument("generate: invalid node bounds");
  if (!(shape.domain[0] < shape.domain[1]) || shape.domain[0] < 0.0)
    throw std::invalid_argument("generate: domain must satisfy 0 <= lo < hi");
  if (!(shape.value_hi > shape.value_lo) || shape.value_lo < 0.0)
    throw std::invalid_argument("generate: value range must satisfy 0 <= lo < hi");

  // Convex and quasi-convex constructions are guaranteed; the rest go
  // through the certifier before being handed out.
  for (int attempt = 0; attempt < shape.max_retries; ++attempt) {
    const std::uint64_t sub_seed = attempt == 0 ? seed : Rng::child_seed(seed, 100 + attempt);
    FunctionSpec candidate;
    switch (cls.kind) {
      case ClassKind::Convex:
        return generate_convex(sub_seed, shape, cls);
      case ClassKind::QuasiConvex:
        return generate_quasi(sub_seed, shape, cls);
      case ClassKind::PFunction: {
        Rng coin(Rng::child_seed(sub_seed, 7));
        candidate = coin.u01() < 0.5 ? generate_convex(sub_seed, shape, cls)
                                     : generate_quasi_sum(sub_seed, shape, cls);
        candidate.id = "gen-p-" + std::to_string(seed);
        break;
      }
      case ClassKind::QClass: {
        // P subset of Q: nonnegative P members certified against Q.
        Rng coin(Rng::child_seed(sub_seed, 7));
        candidate = coin.u01() < 0.5 ? generate_convex(sub_seed, shape, cls)
                                     : generate_quasi_sum(sub_seed, shape, cls);
        candidate.id = "gen-q-" + std::to_string(seed);
        break;
      }
      case ClassKind::SConvexSecondSense:
        candidate = generate_s_convex(sub_seed, shape, cls);
        break;
    }
    if (certify(candidate, cls).certified) return candidate;
  }
  throw std::runtime_error("generate: no certified candidate for class " + to_string(cls.kind) +
                           " within retry budget");
}

// ---------------------------------------------------------------------------
// Built-in catalog

namespace {

std::vector<FunctionSpec> build_catalog() {
  using CC = ConvexityClass;
  const std::vector<CC> convex_family{CC::convex(), CC::quasi_convex(), CC::p_function(),
                                      CC::q_class()};
  std::vector<FunctionSpec> out;

  const auto add = [&](FunctionSpec spec) { out.push_back(std::move(spec)); };

  add({.id = "const1",
       .rule = Polynomial{{1.0}},
       .declared_classes = convex_family,
       .symmetric_about_midpoint = true,
       .monotonicity = Monotonicity::Increasing});
  add({.id = "const3",
       .rule = Polynomial{{3.0}},
       .declared_classes = convex_family,
       .symmetric_about_midpoint = true,
       .monotonicity = Monotonicity::Increasing});
  add({.id = "x",
       .rule = Polynomial{{0.0, 1.0}},
       .declared_classes = convex_family,
       .monotonicity = Monotonicity::Increasing});
  add({.id = "square",
       .rule = Polynomial{{0.0, 0.0, 1.0}},
       .declared_classes = convex_family,
       .monotonicity = Monotonicity::Increasing});
  for (const auto& [id, s] : {std::pair<const char*, double>{"pow-0.25", 0.25},
                              {"pow-0.5", 0.5},
                              {"pow-0.75", 0.75}}) {
    add({.id = id,
         .rule = PowerLaw{s, 1.0, 0.0},
         .declared_classes = {CC::s_convex(s), CC::quasi_convex(), CC::p_function(),
                              CC::q_class()},
         .monotonicity = Monotonicity::Increasing});
  }
  add({.id = "exp",
       .rule = ExpFn{},
       .declared_classes = convex_family,
       .monotonicity = Monotonicity::Increasing});
  add({.id = "abs-centered",
       .rule = AbsAffine{0.5, 1.0, 0.0},
       .declared_classes = convex_family,
       .symmetric_about_midpoint = true,
       .monotonicity = Monotonicity::None});
  // Increasing but concave: quasi-convex without being convex.
  add({.id = "ramp-concave",
       .rule = PiecewiseLinear{{0.0, 0.5, 1.0}, {0.0, 0.8, 1.0}},
       .declared_classes = {CC::quasi_convex(), CC::p_function(), CC::q_class()},
       .monotonicity = Monotonicity::Increasing});
  // Decreasing convex, for the decreasing branch of the monotone bound.
  add({.id = "pl-decreasing",
       .rule = PiecewiseLinear{{0.0, 0.5, 1.0}, {1.0, 0.6, 0.3}},
       .declared_classes = convex_family,
       .monotonicity = Monotonicity::Decreasing});
  // Negative control: sin(pi x) on [0, 1] belongs to none of the classes.
  add({.id = "sin-pi",
       .rule = SinePi{},
       .declared_classes = {},
       .monotonicity = Monotonicity::None});
  return out;
}

}  // namespace

const std::vector<FunctionSpec>& builtin_catalog() {
  static const std::vector<FunctionSpec> catalog = build_catalog();
  return catalog;
}

const FunctionSpec* find_function(std::string_view id) {
  const auto& catalog = builtin_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const FunctionSpec& s) { return s.id == id; });
  return it == catalog.end() ? nullptr : &*it;
}

}  // namespace ineq
