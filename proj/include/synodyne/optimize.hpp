#pragma once

#include <vector>

#include "synodyne/detection.hpp"

namespace synodyne {

enum class Objective { noise, force };

struct SpinorOptimum {
    LoSpinor spinor;
    double value = 0.0;  // achieved minimum of the objective
};

// Minimizes synodyne_psd_dc over normalized spinors in closed form. The
// magnitudes are the components of the bottom eigenvector of the real
// symmetric matrix [[c11, -|c12|], [-|c12|, c22]]; the phases satisfy
// arg(am) + arg(pm) = arg(c12) + pi with am fixed real >= 0 (gauge choice).
// value equals eigenvalues(c).minus.
SpinorOptimum optimal_noise_spinor(const CovarianceMatrix& c);

// Minimizes force_imprecision over spinors at omega_s = omega_m. Optimal
// magnitude ratio |am|/|pm| = |c12|/c11, same phase condition as above;
// value = (c22 - |c12|^2/c11) / (2 |T_p(omega_m)|^2).
// Throws NoTransduction when g = 0.
SpinorOptimum optimal_force_spinor(const SystemParams& p);

struct SweepRow {
    double c_om = 0.0;
    double pow_am = 0.0;     // |am|^2 of the optimal spinor
    double pow_pm = 0.0;     // |pm|^2
    double objective = 0.0;  // achieved minimum
    double reference = 0.0;  // c_minus (noise) or phase-homodyne imprecision (force)
};

// One row per grid point, evaluated at omega = omega_m, in grid order.
// Grid must be non-empty, strictly increasing, and positive; otherwise
// InvalidArgument. The parallel version and the serial reference produce
// bit-identical tables.
std::vector<SweepRow> sweep(const SystemParams& base, const std::vector<double>& c_om_grid,
                            Objective objective);
std::vector<SweepRow> sweep_serial(const SystemParams& base,
                                   const std::vector<double>& c_om_grid,
                                   Objective objective);

// Default grid for cooperativity sweeps: 32 points, log-spaced over
// [1e-2, 1e2].
std::vector<double> default_sweep_grid();

}  // namespace synodyne
