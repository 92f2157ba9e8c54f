#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "synodyne/params.hpp"
#include "synodyne/response.hpp"

namespace synodyne::sim {

// Linear state-space realization of the resonantly pumped system.
//
// State x = (Q, P, X_cav_AM, X_cav_PM); inputs u = (Q_in, P_in, X_AM_in,
// X_PM_in) are independent white noises with the two-sided PSDs in input_psd.
// Outputs y = (X_AM_out, X_PM_out) = output_map * x + feedthrough * u, where
// the SAME noise sample that drives the state also appears in the -X_in
// feedthrough (input-output relation of a one-sided cavity).
//
// Realized dynamics (kappa = cavity decay, gamma_m = mechanical damping):
//   dQ        = (-gamma_m/2 Q + omega_m P)                    dt + sqrt(gamma_m) dQ_in
//   dP        = (-gamma_m/2 P - omega_m Q - g X_cav_AM + f(t)) dt + sqrt(gamma_m) dP_in
//   dX_cav_AM = (-kappa/2 X_cav_AM)                           dt + sqrt(kappa) dX_AM_in
//   dX_cav_PM = (-kappa/2 X_cav_PM - g Q)                     dt + sqrt(kappa) dX_PM_in
//
// The resulting input->output gains equal the closed forms up to an overall
// sign on mechanical transduction and the all-pass cavity factor on optical
// inputs; neither affects any spectral density (transfer_function_check
// verifies this identity).
struct StateSpace {
    Eigen::Matrix4d drift = Eigen::Matrix4d::Zero();              // A
    Eigen::Matrix4d noise_map = Eigen::Matrix4d::Zero();          // B (diagonal)
    Eigen::Matrix<double, 2, 4> output_map = Eigen::Matrix<double, 2, 4>::Zero();   // C
    Eigen::Matrix<double, 2, 4> feedthrough = Eigen::Matrix<double, 2, 4>::Zero();  // D
    Eigen::Vector4d input_psd = Eigen::Vector4d::Zero();  // two-sided, per input
    double suggested_warmup = 0.0;  // time for initial transients to die out
};

// Builds the realization above. Throws UnsupportedDetuning unless delta = 0,
// InvalidParameter for unphysical params.
StateSpace build_state_space(const SystemParams& p);

// Eigenvalues of the drift matrix, sorted by (real, imag) ascending. The
// structure is feed-forward, so they are always {-gamma_m/2 +- i omega_m,
// -kappa/2 (double)} regardless of the coupling.
std::array<cplx, 4> drift_eigenvalues(const StateSpace& ss);

// Frequency-domain self-check: evaluates the resolvent gains
// H(omega) = C (i omega I - A)^{-1} B + D over the grid and returns the
// maximum relative deviation of
//   * |H| entries from |T_q|, |T_p|, |chi_BA| (and unity for AM reflection),
//   * the implied output covariance H diag(input_psd) H^dag from
//     covariance_at(p, omega).
// Throws NumericalFailure if the resolvent is singular (cannot happen for a
// Hurwitz drift at real omega).
double transfer_function_check(const StateSpace& ss, const SystemParams& p,
                               const std::vector<double>& omega_grid);

}  // namespace synodyne::sim
