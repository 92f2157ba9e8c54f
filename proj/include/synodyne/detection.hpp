#pragma once

#include <complex>

#include "synodyne/covariance.hpp"
#include "synodyne/params.hpp"

namespace synodyne {

// Two-tone local oscillator. The waveform is
//   alpha(t) = upper * e^{+i omega_s t} + lower * e^{-i omega_s t},
// where "upper" is the tone sitting at +omega_s in the transform convention
// used throughout (x(omega) = int dt e^{-i omega t} x(t)).
struct LoTones {
    cplx upper;
    cplx lower;
    double omega_s = 0.0;

    double intensity() const { return std::norm(upper) + std::norm(lower); }
    // Time-domain ops (demodulation, force runs) need a usable carrier.
    void validate() const;  // throws ZeroIntensity / InvalidParameter
};

// Normalized detection weights: am multiplies the AM record, pm the PM
// record. Only the ray matters physically; |am|^2 + |pm|^2 = 1 by contract.
struct LoSpinor {
    cplx am;
    cplx pm;
};

// alpha_am = (a_+ + conj(a_-)) / sqrt(2I),  alpha_pm = i (conj(a_+) - a_-) / sqrt(2I).
// Throws ZeroIntensity when both tones vanish. Result is always normalized.
LoSpinor spinor_from_tones(const LoTones& tones);

// Inverse of spinor_from_tones carrying the requested total intensity.
// Expects a normalized spinor (round-trips to 1e-12).
LoTones tones_from_spinor(const LoSpinor& s, double intensity, double omega_s);

cplx lo_amplitude(const LoTones& tones, double time);

// Retiming the LO by psi/omega_s: (e^{+i psi} am, e^{-i psi} pm).
// Leaves every figure of merit below invariant.
LoSpinor time_shifted(const LoSpinor& s, double psi);

// dc noise density seen by the two-tone detector when the covariance is
// evaluated at the LO sideband frequency:
//   |am|^2 c11 + |pm|^2 c22 + 2 Re(conj(am) conj(pm) c12).
// Equals the Rayleigh quotient y^dag C y with y = (am, conj(pm)), hence is
// always within [c_minus, c_plus]. The spinor is normalized defensively.
double synodyne_psd_dc(const CovarianceMatrix& c, const LoSpinor& s);

// Force-measurement imprecision of the detector at omega_s = omega_m:
//   S_FF = synodyne_psd_dc(C(omega_m), s) / (2 |pm|^2 |T_p(omega_m)|^2).
// Throws NoSignal when pm = 0 (a pure-AM detector never sees the force).
// Returns +inf when g = 0 (nothing is transduced).
double force_imprecision(const SystemParams& p, const LoSpinor& s);

// Imprecision of the phase-quadrature homodyne, spinor (0, 1):
// c22(omega_m) / (2 |T_p(omega_m)|^2). The function minimized by sql().
double homodyne_force_imprecision(const SystemParams& p);

struct SqlPoint {
    double c_om_star = 0.0;  // cooperativity minimizing the homodyne imprecision
    double s_sql = 0.0;      // the minimal imprecision itself
};

// Minimum of homodyne_force_imprecision over the cooperativity (bracketed
// 1-D minimization on log C to relative tolerance 1e-10); omega_m, gamma_m,
// nbar are taken from the template, its coupling is ignored.
SqlPoint sql(const SystemParams& p);

}  // namespace synodyne
