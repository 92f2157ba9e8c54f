#include "synodyne/detection.hpp"

#include <cmath>

#include "synodyne/errors.hpp"
#include "synodyne/minimize.hpp"
#include "synodyne/response.hpp"

namespace synodyne {

void LoTones::validate() const {
    if (!(intensity() > 0.0)) throw ZeroIntensity("local oscillator has zero power");
    if (!(omega_s > 0.0) || !std::isfinite(omega_s))
        throw InvalidParameter("LO sideband frequency must be positive and finite");
    if (!std::isfinite(upper.real()) || !std::isfinite(upper.imag()) ||
        !std::isfinite(lower.real()) || !std::isfinite(lower.imag()))
        throw InvalidParameter("LO tone amplitudes must be finite");
}

LoSpinor spinor_from_tones(const LoTones& tones) {
    const double i2 = 2.0 * tones.intensity();
    if (!(i2 > 0.0)) throw ZeroIntensity("local oscillator has zero power");
    const double root = std::sqrt(i2);
    LoSpinor s;
    s.am = (tones.upper + std::conj(tones.lower)) / root;
    s.pm = cplx(0.0, 1.0) * (std::conj(tones.upper) - tones.lower) / root;
    return s;
}

LoTones tones_from_spinor(const LoSpinor& s, double intensity, double omega_s) {
    if (!(intensity > 0.0)) throw ZeroIntensity("requested zero LO intensity");
    const double root = std::sqrt(intensity / 2.0);
    LoTones t;
    t.upper = root * (s.am + cplx(0.0, 1.0) * std::conj(s.pm));
    t.lower = root * (std::conj(s.am) + cplx(0.0, 1.0) * s.pm);
    t.omega_s = omega_s;
    return t;
}

cplx lo_amplitude(const LoTones& tones, double time) {
    const double ph = tones.omega_s * time;
    return tones.upper * std::polar(1.0, ph) + tones.lower * std::polar(1.0, -ph);
}

LoSpinor time_shifted(const LoSpinor& s, double psi) {
    return {s.am * std::polar(1.0, psi), s.pm * std::polar(1.0, -psi)};
}

namespace {

LoSpinor normalized(const LoSpinor& s) {
    const double n2 = std::norm(s.am) + std::norm(s.pm);
    if (!(n2 > 0.0)) throw ZeroIntensity("zero detection spinor");
    const double inv = 1.0 / std::sqrt(n2);
    return {s.am * inv, s.pm * inv};
}

}  // namespace

double synodyne_psd_dc(const CovarianceMatrix& c, const LoSpinor& raw) {
    const LoSpinor s = normalized(raw);
    const cplx cross = std::conj(s.am) * std::conj(s.pm) * c.c12;
    return std::norm(s.am) * c.c11 + std::norm(s.pm) * c.c22 + 2.0 * cross.real();
}

double force_imprecision(const SystemParams& p, const LoSpinor& raw) {
    const LoSpinor s = normalized(raw);
    if (s.pm == cplx(0.0, 0.0))
        throw NoSignal("pure-AM detector carries no force signal");
    const CovarianceMatrix c = covariance_at(p, p.omega_m);
    const double tp2 = std::norm(responses(p, p.omega_m).t_p);
    return synodyne_psd_dc(c, s) / (2.0 * std::norm(s.pm) * tp2);
}

double homodyne_force_imprecision(const SystemParams& p) {
    return force_imprecision(p, LoSpinor{cplx(0.0, 0.0), cplx(1.0, 0.0)});
}

SqlPoint sql(const SystemParams& p) {
    p.validate();
    require_resonant_pump(p);
    const double lo = std::log(1e-8), hi = std::log(1e8);
    const auto h = [&p](double u) {
        return homodyne_force_imprecision(with_cooperativity(p, std::exp(u)));
    };
    // 1e-10 absolute on log C is 1e-10 relative on C.
    const ScalarMinimum m = brent_minimize(h, lo, hi, 1e-10);
    return {std::exp(m.x), m.value};
}

}  // namespace synodyne
