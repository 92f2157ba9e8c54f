#pragma once

#include <cmath>
#include <optional>

#include "synodyne/errors.hpp"

namespace synodyne {

// Linearized optomechanical system on a one-sided cavity, pumped on
// resonance.  All rates are in units of the cavity linewidth kappa, so
// kappa = 1 unless a caller deliberately rescales.
struct SystemParams {
    double omega_m = 0.0;  // mechanical frequency
    double kappa = 1.0;    // cavity linewidth (unit of all rates)
    double gamma_m = 0.0;  // mechanical linewidth
    double nbar = 0.0;     // thermal occupation of the mechanical bath
    double g = 0.0;        // linearized coupling, g >= 0
    double delta = 0.0;    // pump detuning; only 0 is supported

    void validate() const {
        if (!(omega_m > 0.0) || !(kappa > 0.0) || !(gamma_m > 0.0))
            throw InvalidParameter("omega_m, kappa, gamma_m must be strictly positive");
        if (!(nbar >= 0.0)) throw InvalidParameter("nbar must be >= 0");
        if (!(g >= 0.0)) throw InvalidParameter("coupling g must be >= 0");
        if (!std::isfinite(omega_m) || !std::isfinite(gamma_m) || !std::isfinite(nbar) ||
            !std::isfinite(g) || !std::isfinite(kappa) || !std::isfinite(delta))
            throw InvalidParameter("parameters must be finite");
    }
};

// Every implemented operation assumes a resonant pump.
inline void require_resonant_pump(const SystemParams& p) {
    if (p.delta != 0.0)
        throw UnsupportedDetuning("nonzero pump detuning is not supported");
}

inline double g_from_cooperativity(double c_om, double kappa, double gamma_m) {
    if (!(c_om >= 0.0)) throw InvalidParameter("cooperativity must be >= 0");
    return std::sqrt(c_om * kappa * gamma_m / 2.0);
}

// Measurement cooperativity C_OM = 2 g^2 / (kappa gamma_m).
inline double cooperativity(const SystemParams& p) {
    return 2.0 * p.g * p.g / (p.kappa * p.gamma_m);
}

// Exactly one of {g, c_om} picks the coupling strength.
inline SystemParams make_params(double omega_m, double gamma_m, double nbar,
                                std::optional<double> g, std::optional<double> c_om,
                                double kappa = 1.0) {
    if (g.has_value() == c_om.has_value())
        throw AmbiguousCoupling("specify exactly one of coupling g or cooperativity");
    SystemParams p;
    p.omega_m = omega_m;
    p.kappa = kappa;
    p.gamma_m = gamma_m;
    p.nbar = nbar;
    p.g = g ? *g : g_from_cooperativity(*c_om, kappa, gamma_m);
    p.validate();
    return p;
}

// Same system at a different cooperativity (used by sweeps).
inline SystemParams with_cooperativity(SystemParams p, double c_om) {
    p.g = g_from_cooperativity(c_om, p.kappa, p.gamma_m);
    p.validate();
    return p;
}

}  // namespace synodyne
