#pragma once

#include <complex>

#include "synodyne/params.hpp"

namespace synodyne {

using cplx = std::complex<double>;

// Frequency-domain responses of the resonantly pumped system, Fourier
// convention x(omega) = \int dt e^{-i omega t} x(t).  With that convention
// chi_m carries +i omega gamma_m in the denominator and every response obeys
// f(-omega) = conj(f(omega)).
struct ResponseSet {
    double omega = 0.0;
    cplx chi_m;   // mechanical susceptibility
    cplx chi_ba;  // back-action transfer AM -> PM
    cplx t_q;     // mechanical Q noise -> PM output
    cplx t_p;     // mechanical P noise -> PM output
};

// chi_m(omega) = 1 / (gamma_m^2/4 + omega_m^2 - omega^2 + i omega gamma_m)
cplx mech_susceptibility(const SystemParams& p, double omega);

// chi_ba(omega) = g^2 kappa omega_m / (kappa^2/4 + omega^2) * chi_m(omega)
cplx back_action(const SystemParams& p, double omega);

ResponseSet responses(const SystemParams& p, double omega);

}  // namespace synodyne
