#pragma once

#include <vector>

#include "synodyne/detection.hpp"
#include "synodyne/sim/simulate.hpp"

namespace synodyne::sim {

// Synthesizes the synodyne photocurrent from the two output quadratures:
//   Xi[k] = (Re alpha(t_k) * X_AM_out[k] + Im alpha(t_k) * X_PM_out[k]) / sqrt(I),
// with t_k = t0 + k dt the absolute record clock and I the total LO
// intensity. With this normalization the dc density of Xi estimates
// synodyne_psd_dc(C(omega_s), spinor) directly: vacuum records give 1/2.
// Returns a TimeSeries with the single channel "Xi" on the same clock.
// Throws InvalidArgument when the input channels are missing or of unequal
// length; tone validation errors propagate.
TimeSeries demodulate_synodyne(const TimeSeries& ts, const LoTones& tones);

// Finite-time quadrature projections of one record:
//   component(xi) = sum_k record[k] * cos(omega t_k - xi) * dt,  t_k = t0 + k dt,
// evaluated for every xi in xi_grid. Requires the record to span at least
// 100 cycles of omega (InvalidArgument otherwise). Exactly linear in the
// record.
std::vector<double> temporal_phase_components(const std::vector<double>& record, double dt,
                                              double omega, const std::vector<double>& xi_grid,
                                              double t0 = 0.0);

}  // namespace synodyne::sim
