#pragma once

namespace qwalk {

// Element counts below this stay serial; OpenMP fork/join costs more than the
// loop body for small windows.
inline constexpr long omp_threshold = 4096;

// Thread cap from the QWALK_THREADS environment variable.
// 0 or unset means "let the OpenMP runtime decide".
int thread_cap();

// Applies the cap process-wide (no-op when built without OpenMP).
void apply_thread_cap();

} // namespace qwalk
