#pragma once

#include <vector>

#include "synodyne/covariance.hpp"

namespace synodyne {

// One frequency of the analytic output-noise landscape: covariance entries,
// covariance eigenvalues, and the per-frequency-optimized homodyne minimum.
struct SpectrumRow {
    double omega = 0.0;
    double c11 = 0.0;
    double re_c12 = 0.0;
    double im_c12 = 0.0;
    double c22 = 0.0;
    double eig_minus = 0.0;
    double eig_plus = 0.0;
    double hom_theta = 0.0;  // minimizing homodyne angle, [0, pi)
    double hom_min = 0.0;
};

// One row per grid frequency, in grid order. The parallel version and the
// serial reference produce bit-identical tables. Grid must be non-empty and
// strictly increasing; otherwise InvalidArgument.
std::vector<SpectrumRow> spectrum_table(const SystemParams& p,
                                        const std::vector<double>& omega_grid);
std::vector<SpectrumRow> spectrum_table_serial(const SystemParams& p,
                                               const std::vector<double>& omega_grid);

// n >= 2 evenly spaced points covering [lo, hi]; endpoints exact.
std::vector<double> linear_grid(double lo, double hi, int n);

// n >= 2 log-spaced points covering [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, int n);

// Odd-sized linear grid omega_m * [1 - half_width, 1 + half_width] whose
// middle point is exactly omega_m.
std::vector<double> resonance_grid(double omega_m, double half_width, int n);

}  // namespace synodyne
