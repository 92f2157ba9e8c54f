#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synodyne/sim/state_space.hpp"

namespace synodyne::sim {

// Deterministic additive drive on the mechanical momentum:
//   f(t) = amplitude * cos(frequency * t + phase),
// with t the absolute integration clock (warmup included).
struct ForceProfile {
    double amplitude = 0.0;
    double frequency = 0.0;
    double phase = 0.0;

    void validate() const;  // amplitude >= 0, frequency > 0, all finite
};

struct SimConfig {
    double dt = 0.01;       // integration step
    double duration = 0.0;  // recorded time span (excludes warmup)
    std::uint64_t seed = 0;
    int segments = 8;  // Welch segment count used by spectral consumers
    std::optional<ForceProfile> force;
    // Pre-roll discarded before recording starts; negative means "use the
    // state space's suggested_warmup".
    double warmup = -1.0;

    void validate() const;
};

// Uniformly sampled named records sharing one clock: sample k of every
// channel was taken at time t0 + k * dt.
struct TimeSeries {
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> data;  // parallel to names

    std::size_t frames() const { return data.empty() ? 0 : data[0].size(); }
    const std::vector<double>& channel(std::string_view name) const;  // InvalidArgument if absent
};

// Hard stability gate for the explicit integrator.
constexpr double kMaxEigStep = 0.1;

// Euler-Maruyama integration of dx = (A x + f(t) e_P) dt + B dW with
// per-step Gaussian increments of variance input_psd[i]/dt per channel. The
// same per-step noise samples drive the state and the feedthrough term of
// the outputs. Channel c draws from an independent stream seeded with
// derive_seed(cfg.seed, c); fixed seeds give bit-identical records.
//
// Returns channels "X_AM_out", "X_PM_out" at full rate, with t0 equal to the
// warmup span. Throws StepTooLarge when any |eig(A)| * dt > 0.1,
// NumericalFailure if the integration leaves the finite range.
TimeSeries simulate(const StateSpace& ss, const SimConfig& cfg);

}  // namespace synodyne::sim
