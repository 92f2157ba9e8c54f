#pragma once

#include <functional>

namespace synodyne {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

// Brent's parabolic-interpolation/golden-section minimizer on [a, b].
// x_tol is the absolute half-width demanded around the minimizer.
// Throws OptimizationFailure if max_iter is exhausted.
ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a, double b,
                             double x_tol, int max_iter = 200);

}  // namespace synodyne
