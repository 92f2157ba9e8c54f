#pragma once

#include <vector>

#include "synodyne/detection.hpp"
#include "synodyne/sim/simulate.hpp"

namespace synodyne::sim {

// Measured response of the full discrete pipeline (integrate -> demodulate ->
// dc-average) to a unit-amplitude force at the LO sideband frequency.
struct ForceCalibration {
    double gain = 0.0;           // dc response per unit force amplitude
    double aligned_phase = 0.0;  // drive phase maximizing the dc response
};

// dc average of the demodulated record of one NOISELESS run (all input PSDs
// zero) driven by the given force. Exactly linear in the amplitude; used for
// calibration and phase-selectivity checks.
double noiseless_force_response(const SystemParams& params, const LoTones& tones,
                                const ForceProfile& force, const SimConfig& cfg);

// Two noiseless reference runs (phases 0 and -pi/2, amplitude 2.5) fix the
// gain and the aligned phase of the discrete pipeline. Because every run
// shares duration, warmup, step and zero initial state, estimates formed
// with this calibration recover amplitudes exactly (to rounding), transients
// included. Throws NoSignal when the detection spinor has no PM weight.
ForceCalibration calibrate_force_response(const SystemParams& params, const LoTones& tones,
                                          const SimConfig& cfg);

struct ForceEstimate {
    double estimate = 0.0;       // mean of per_rep
    double se = 0.0;             // scatter / sqrt(repetitions); 0 for one repetition
    double ci_low = 0.0;         // estimate -+ 3 se (pre-registered 3-sigma interval)
    double ci_high = 0.0;
    double gain = 0.0;           // calibration gain actually used
    double aligned_phase = 0.0;
    std::vector<double> per_rep;
};

// Repeated noisy runs of the force profile, each demodulated with the tones
// and reduced to dc-average / gain. Repetition r uses the derived seed
// derive_seed(cfg.seed, r); cfg.force is ignored in favor of `force`. The
// estimator responds only to the force component along the aligned phase
// (driving in quadrature yields estimates consistent with zero — documented,
// not an error).
//
// Preconditions: force.frequency == tones.omega_s (InvalidArgument),
// repetitions >= 1, PM weight nonzero (NoSignal). The parallel version and
// the serial reference produce bit-identical results.
ForceEstimate estimate_force(const SystemParams& params, const LoTones& tones,
                             const ForceProfile& force, const SimConfig& cfg, int repetitions);
ForceEstimate estimate_force_serial(const SystemParams& params, const LoTones& tones,
                                    const ForceProfile& force, const SimConfig& cfg,
                                    int repetitions);

// Analytic variance of one repetition's estimate: the dc density of the
// demodulated record referred to force units through the detector gain,
// divided by the averaging time T = cfg.duration:
//   Var = 4 gamma_m * force_imprecision(params, spinor) / T.
double predicted_estimator_variance(const SystemParams& params, const LoTones& tones,
                                    double duration);

}  // namespace synodyne::sim
