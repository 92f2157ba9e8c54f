#include "synodyne/sim/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "synodyne/covariance.hpp"
#include "synodyne/errors.hpp"

namespace synodyne::sim {

StateSpace build_state_space(const SystemParams& p) {
    p.validate();
    require_resonant_pump(p);

    StateSpace ss;
    const double g = p.g;
    ss.drift << -p.gamma_m / 2, p.omega_m, 0, 0,            //
        -p.omega_m, -p.gamma_m / 2, -g, 0,                  //
        0, 0, -p.kappa / 2, 0,                              //
        -g, 0, 0, -p.kappa / 2;

    ss.noise_map.diagonal() << std::sqrt(p.gamma_m), std::sqrt(p.gamma_m),
        std::sqrt(p.kappa), std::sqrt(p.kappa);

    const double rk = std::sqrt(p.kappa);
    ss.output_map << 0, 0, rk, 0,  //
        0, 0, 0, rk;
    ss.feedthrough << 0, 0, -1, 0,  //
        0, 0, 0, -1;

    ss.input_psd << p.nbar + 0.5, p.nbar + 0.5, 0.5, 0.5;
    ss.suggested_warmup = 16.0 / std::min(p.gamma_m, p.kappa);
    return ss;
}

std::array<cplx, 4> drift_eigenvalues(const StateSpace& ss) {
    const Eigen::EigenSolver<Eigen::Matrix4d> solver(ss.drift);
    std::array<cplx, 4> eig;
    for (int i = 0; i < 4; ++i) eig[i] = solver.eigenvalues()(i);
    std::sort(eig.begin(), eig.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eig;
}

namespace {

double rel_dev(double measured, double target) {
    const double scale = std::max(std::abs(measured), std::abs(target));
    if (scale == 0.0) return 0.0;
    return std::abs(measured - target) / scale;
}

}  // namespace

double transfer_function_check(const StateSpace& ss, const SystemParams& p,
                               const std::vector<double>& omega_grid) {
    p.validate();
    require_resonant_pump(p);

    using Mat4c = Eigen::Matrix4cd;
    using Mat24c = Eigen::Matrix<std::complex<double>, 2, 4>;

    double worst = 0.0;
    for (double omega : omega_grid) {
        Mat4c resolvent_arg = Mat4c::Identity() * cplx(0.0, omega) - ss.drift.cast<cplx>();
        const Eigen::FullPivLU<Mat4c> lu(resolvent_arg);
        if (!lu.isInvertible()) {
            throw NumericalFailure("transfer_function_check: singular resolvent at omega = " +
                                   std::to_string(omega));
        }
        const Mat24c h = ss.output_map.cast<cplx>() * lu.inverse() * ss.noise_map.cast<cplx>() +
                         ss.feedthrough.cast<cplx>();

        const ResponseSet r = responses(p, omega);
        // Gain magnitudes against the closed forms (phases differ only by the
        // all-pass factor / overall sign, which the magnitudes quotient out).
        worst = std::max(worst, rel_dev(std::abs(h(1, 0)), std::abs(r.t_q)));
        worst = std::max(worst, rel_dev(std::abs(h(1, 1)), std::abs(r.t_p)));
        worst = std::max(worst, rel_dev(std::abs(h(1, 2)), std::abs(r.chi_ba)));
        worst = std::max(worst, rel_dev(std::abs(h(0, 2)), 1.0));  // all-pass reflection
        worst = std::max(worst, rel_dev(std::abs(h(0, 0)), 0.0));
        worst = std::max(worst, rel_dev(std::abs(h(0, 1)), 0.0));
        worst = std::max(worst, rel_dev(std::abs(h(0, 3)), 0.0));

        // Implied stationary output covariance at this frequency.
        cplx s01(0.0, 0.0);
        double s00 = 0.0, s11 = 0.0;
        for (int k = 0; k < 4; ++k) {
            s00 += std::norm(h(0, k)) * ss.input_psd(k);
            s11 += std::norm(h(1, k)) * ss.input_psd(k);
            s01 += h(0, k) * std::conj(h(1, k)) * ss.input_psd(k);
        }
        const CovarianceMatrix c = covariance_at(p, omega);
        worst = std::max(worst, rel_dev(s00, c.c11));
        worst = std::max(worst, rel_dev(s11, c.c22));
        const double cross_scale = std::max(std::abs(s01), std::abs(c.c12));
        if (cross_scale > 0.0) {
            worst = std::max(worst, std::abs(s01 - c.c12) / cross_scale);
        }
    }
    return worst;
}

}  // namespace synodyne::sim
