// Benchmark of the data-parallel kernels against their serial reference
// implementations: the certification grid scan, the verification sweep and
// the falsification trial loop. Results must agree bit for bit; the timing
// difference is the point of the comparison.

#include <cmath>
#include <cstdio>
#include <string>

#include "ineq/exec.hpp"
#include "ineq/function_catalog.hpp"
#include "ineq/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename F>
double best_of(int reps, F&& work) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now();
    work();
    best = std::min(best, now() - t0);
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  using namespace ineq;
  std::printf("threads available: %d\n", max_threads());

  // Kernel 1: certification grid scan on a dense grid.
  {
    const FunctionSpec* f = find_function("exp");
    const GridSpec grid{201, 201, 199};
    CertificationResult serial_result, parallel_result;
    const double ts = best_of(3, [&] {
      serial_result = certify(*f, ConvexityClass::convex(), grid, kDefaultCertTolerance,
                              Exec::Serial);
    });
    const double tp = best_of(3, [&] {
      parallel_result = certify(*f, ConvexityClass::convex(), grid, kDefaultCertTolerance,
                                Exec::Parallel);
    });
    report("certify 201x201x199", ts, tp,
           serial_result.max_violation == parallel_result.max_violation &&
               serial_result.certified == parallel_result.certified);
  }

  // Kernel 2: verification sweep across the catalog.
  {
    SweepConfig config;
    for (const FunctionSpec& spec : builtin_catalog())
      if (!spec.declared_classes.empty()) config.function_ids.push_back(spec.id);
    config.class_filter = ClassKind::QuasiConvex;
    config.p_grid = {0.5, 1.0, 2.0, 3.0};
    config.q_grid = {0.5, 1.0, 2.0, 3.0};
    std::vector<VerificationReport> serial_reports, parallel_reports;
    const double ts = best_of(2, [&] { serial_reports = sweep(config, Exec::Serial); });
    const double tp = best_of(2, [&] { parallel_reports = sweep(config, Exec::Parallel); });
    bool identical = serial_reports.size() == parallel_reports.size();
    for (std::size_t i = 0; identical && i < serial_reports.size(); ++i)
      identical = serial_reports[i].lhs == parallel_reports[i].lhs &&
                  serial_reports[i].rhs == parallel_reports[i].rhs &&
                  serial_reports[i].verdict == parallel_reports[i].verdict;
    report("sweep 11 fns x 16 grid", ts, tp, identical);
  }

  // Kernel 3: falsification trials.
  {
    const auto ranges = FalsificationRanges::defaults_for(ClassKind::Convex);
    FalsificationSummary serial_summary, parallel_summary;
    const double ts = best_of(2, [&] {
      serial_summary = falsify(ClassKind::Convex, ranges, 60, 7, Exec::Serial);
    });
    const double tp = best_of(2, [&] {
      parallel_summary = falsify(ClassKind::Convex, ranges, 60, 7, Exec::Parallel);
    });
    bool identical = serial_summary.holds == parallel_summary.holds &&
                     serial_summary.min_slack == parallel_summary.min_slack;
    for (std::size_t i = 0; identical && i < serial_summary.reports.size(); ++i)
      identical = serial_summary.reports[i].lhs == parallel_summary.reports[i].lhs;
    report("falsify 60 trials", ts, tp, identical);
  }

  return 0;
}
