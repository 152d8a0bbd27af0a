#pragma once

namespace ineq {

// Execution policy for the data-parallel kernels (certification grid scans,
// sweep and falsification trial loops). Serial runs the reference loop;
// Parallel runs the OpenMP version. Both produce bit-identical output.
enum class Exec { Serial, Parallel };

// Number of threads the Parallel policy would use (1 without OpenMP).
int max_threads();

}  // namespace ineq
