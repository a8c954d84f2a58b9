#pragma once

namespace cherednik {

// Selects between the OpenMP kernel and the serial reference path. Both
// produce identical results; the serial path is kept for testing and
// benchmarking.
enum class Execution { serial, parallel };

// Number of worker threads the parallel path would use (1 without OpenMP).
int parallel_threads() noexcept;

} // namespace cherednik
