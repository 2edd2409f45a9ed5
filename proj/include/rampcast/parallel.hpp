#pragma once

namespace rampcast {

// Worker threads available to the OpenMP kernels (1 in a serial build).
int max_threads();

// Honors the RAMPCAST_THREADS environment variable when set to a positive
// integer. Called once at CLI startup.
void apply_thread_cap_from_env();

}  // namespace rampcast
