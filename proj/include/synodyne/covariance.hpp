#pragma once

#include <complex>

#include "synodyne/response.hpp"

namespace synodyne {

// One-frequency symmetrized covariance of the two output quadratures,
// indices (1,2) = (AM, PM).  Two-sided spectral densities; vacuum = 1/2.
// Hermitian: the (2,1) entry is conj(c12).
struct CovarianceMatrix {
    double omega = 0.0;
    double c11 = 0.0;
    cplx c12;
    double c22 = 0.0;
};

struct EigenvaluePair {
    double minus = 0.0;  // smaller
    double plus = 0.0;   // larger
};

// Homodyne minimum over the quadrature angle; theta in [0, pi).
struct HomodyneMin {
    double theta = 0.0;
    double value = 0.0;
};

// Output covariance of the pumped cavity.  c11 = 1/2 exactly (the AM
// quadrature leaves the cavity untouched), c12 = conj(chi_ba)/2,
// c22 = 1/2 + |chi_ba|^2/2 + (nbar + 1/2)(|t_q|^2 + |t_p|^2).
CovarianceMatrix covariance_at(const SystemParams& p, double omega);

EigenvaluePair eigenvalues(const CovarianceMatrix& c);

// Measured noise of a single-quadrature (homodyne) detector at angle theta:
// cos^2 c11 + sin^2 c22 + 2 sin cos Re(c12).  Only Re(c12) is accessible.
double homodyne_psd(const CovarianceMatrix& c, double theta);

// Minimum of homodyne_psd over theta; ties broken toward smaller theta.
HomodyneMin min_homodyne(const CovarianceMatrix& c);

}  // namespace synodyne
