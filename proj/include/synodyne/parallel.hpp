#pragma once

namespace synodyne {

// Number of OpenMP workers parallel kernels ask for: the smallest of the
// OpenMP maximum, the SYNODYNE_THREADS environment variable (if set to a
// positive integer), and the programmatic cap below. At least 1.
int worker_count();

// Process-wide cap used by worker_count(); n <= 0 removes the cap.
void set_worker_cap(int n);

}  // namespace synodyne
