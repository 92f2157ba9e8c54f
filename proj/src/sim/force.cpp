#include "synodyne/sim/force.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>

#include "synodyne/errors.hpp"
#include "synodyne/parallel.hpp"
#include "synodyne/sim/demod.hpp"
#include "synodyne/sim/rng.hpp"

namespace synodyne::sim {

namespace {

double dc_mean(const TimeSeries& xi) {
    const std::vector<double>& v = xi.channel("Xi");
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    return sum / static_cast<double>(v.size());
}

double pipeline_response(const StateSpace& ss, const LoTones& tones, const ForceProfile& force,
                         SimConfig cfg, std::uint64_t seed) {
    cfg.force = force;
    cfg.seed = seed;
    return dc_mean(demodulate_synodyne(simulate(ss, cfg), tones));
}

ForceEstimate estimate_force_impl(const SystemParams& params, const LoTones& tones,
                                  const ForceProfile& force, const SimConfig& cfg,
                                  int repetitions, bool parallel) {
    tones.validate();
    force.validate();
    cfg.validate();
    if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
    const double f_tol = 1e-12 * tones.omega_s;
    if (std::abs(force.frequency - tones.omega_s) > f_tol) {
        throw InvalidArgument("force frequency must equal the LO sideband frequency");
    }

    const ForceCalibration cal = calibrate_force_response(params, tones, cfg);
    const StateSpace ss = build_state_space(params);

    ForceEstimate est;
    est.gain = cal.gain;
    est.aligned_phase = cal.aligned_phase;
    est.per_rep.assign(static_cast<std::size_t>(repetitions), 0.0);

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(repetitions));
    if (parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
        for (int r = 0; r < repetitions; ++r) {
            try {
                est.per_rep[r] = pipeline_response(ss, tones, force, cfg,
                                                   derive_seed(cfg.seed, r)) /
                                 cal.gain;
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    } else {
        for (int r = 0; r < repetitions; ++r) {
            try {
                est.per_rep[r] = pipeline_response(ss, tones, force, cfg,
                                                   derive_seed(cfg.seed, r)) /
                                 cal.gain;
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    }
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    const double n = static_cast<double>(repetitions);
    est.estimate = std::accumulate(est.per_rep.begin(), est.per_rep.end(), 0.0) / n;
    if (repetitions > 1) {
        double ssq = 0.0;
        for (double v : est.per_rep) ssq += (v - est.estimate) * (v - est.estimate);
        est.se = std::sqrt(ssq / (n - 1.0) / n);
    }
    est.ci_low = est.estimate - 3.0 * est.se;
    est.ci_high = est.estimate + 3.0 * est.se;
    return est;
}

}  // namespace

double noiseless_force_response(const SystemParams& params, const LoTones& tones,
                                const ForceProfile& force, const SimConfig& cfg) {
    tones.validate();
    force.validate();
    StateSpace ss = build_state_space(params);
    ss.input_psd.setZero();
    return pipeline_response(ss, tones, force, cfg, cfg.seed);
}

ForceCalibration calibrate_force_response(const SystemParams& params, const LoTones& tones,
                                          const SimConfig& cfg) {
    tones.validate();
    const LoSpinor s = spinor_from_tones(tones);
    if (std::norm(s.pm) == 0.0) {
        throw NoSignal("a pure-AM detector never sees the force");
    }
    if (params.g == 0.0) {
        throw NoTransduction("no optomechanical coupling: force leaves no trace in the light");
    }

    constexpr double kReferenceAmplitude = 2.5;
    const ForceProfile in_phase{kReferenceAmplitude, tones.omega_s, 0.0};
    const ForceProfile quadrature{kReferenceAmplitude, tones.omega_s, -std::numbers::pi / 2};
    const double m0 = noiseless_force_response(params, tones, in_phase, cfg);
    const double m1 = noiseless_force_response(params, tones, quadrature, cfg);

    ForceCalibration cal;
    cal.gain = std::hypot(m0, m1) / kReferenceAmplitude;
    if (cal.gain == 0.0) {
        throw NumericalFailure("calibration runs produced no dc response");
    }
    cal.aligned_phase = -std::atan2(m1, m0);
    return cal;
}

ForceEstimate estimate_force(const SystemParams& params, const LoTones& tones,
                             const ForceProfile& force, const SimConfig& cfg, int repetitions) {
    return estimate_force_impl(params, tones, force, cfg, repetitions, true);
}

ForceEstimate estimate_force_serial(const SystemParams& params, const LoTones& tones,
                                    const ForceProfile& force, const SimConfig& cfg,
                                    int repetitions) {
    return estimate_force_impl(params, tones, force, cfg, repetitions, false);
}

double predicted_estimator_variance(const SystemParams& params, const LoTones& tones,
                                    double duration) {
    if (!(duration > 0.0)) throw InvalidArgument("duration must be > 0");
    const LoSpinor s = spinor_from_tones(tones);
    return 4.0 * params.gamma_m * force_imprecision(params, s) / duration;
}

}  // namespace synodyne::sim
