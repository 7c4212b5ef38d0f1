#pragma once

namespace so5 {

// Number of OpenMP workers to use. Honors the WITTEN_THREADS environment
// variable (positive integer, read at every call so tests can change it);
// anything unset or unparsable falls back to the OpenMP default.
int worker_count();

}  // namespace so5
