#include "synodyne/response.hpp"

namespace synodyne {

cplx mech_susceptibility(const SystemParams& p, double omega) {
    p.validate();
    require_resonant_pump(p);
    const double g2 = p.gamma_m * p.gamma_m / 4.0;
    return 1.0 / cplx(g2 + p.omega_m * p.omega_m - omega * omega, omega * p.gamma_m);
}

cplx back_action(const SystemParams& p, double omega) {
    const double lorentz = p.kappa * p.kappa / 4.0 + omega * omega;
    return p.g * p.g * p.kappa * p.omega_m / lorentz * mech_susceptibility(p, omega);
}

ResponseSet responses(const SystemParams& p, double omega) {
    p.validate();
    require_resonant_pump(p);
    ResponseSet r;
    r.omega = omega;
    r.chi_m = mech_susceptibility(p, omega);
    const cplx cav = cplx(p.kappa / 2.0, omega);  // kappa/2 + i omega
    const double root = p.g * std::sqrt(p.kappa * p.gamma_m);
    r.t_q = root * cplx(p.gamma_m / 2.0, omega) / cav * r.chi_m;
    r.t_p = root * p.omega_m / cav * r.chi_m;
    r.chi_ba = p.g * p.g * p.kappa * p.omega_m / std::norm(cav) * r.chi_m;
    return r;
}

}  // namespace synodyne
