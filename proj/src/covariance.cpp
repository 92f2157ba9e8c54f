#include "synodyne/covariance.hpp"

#include <cmath>
#include <numbers>

namespace synodyne {

CovarianceMatrix covariance_at(const SystemParams& p, double omega) {
    const ResponseSet r = responses(p, omega);
    CovarianceMatrix c;
    c.omega = omega;
    c.c11 = 0.5;
    c.c12 = std::conj(r.chi_ba) / 2.0;
    // Optical vacuum (1/2 per quadrature) plus the thermal mechanical bath
    // (nbar + 1/2 per quadrature); the symmetrized Q-P cross term vanishes.
    c.c22 = 0.5 + std::norm(r.chi_ba) / 2.0 +
            (p.nbar + 0.5) * (std::norm(r.t_q) + std::norm(r.t_p));
    return c;
}

EigenvaluePair eigenvalues(const CovarianceMatrix& c) {
    const double mid = 0.5 * (c.c11 + c.c22);
    const double rad = std::hypot(0.5 * (c.c22 - c.c11), std::abs(c.c12));
    return {mid - rad, mid + rad};
}

double homodyne_psd(const CovarianceMatrix& c, double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    return ct * ct * c.c11 + st * st * c.c22 + 2.0 * (st * ct) * c.c12.real();
}

HomodyneMin min_homodyne(const CovarianceMatrix& c) {
    // S(theta) = M + R cos(2 theta - phi) with R >= 0.
    const double half_diff = 0.5 * (c.c11 - c.c22);
    const double re12 = c.c12.real();
    const double mid = 0.5 * (c.c11 + c.c22);
    const double rad = std::hypot(half_diff, re12);
    HomodyneMin m;
    m.value = mid - rad;
    if (rad == 0.0) {
        m.theta = 0.0;  // flat in theta; smallest angle by convention
        return m;
    }
    const double pi = std::numbers::pi;
    double theta = 0.5 * (std::atan2(re12, half_diff) + pi);
    if (theta < 0.0) theta += pi;
    if (theta >= pi) theta -= pi;
    m.theta = theta;
    return m;
}

}  // namespace synodyne
