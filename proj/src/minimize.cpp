#include "synodyne/minimize.hpp"

#include <cmath>
#include <utility>

#include "synodyne/errors.hpp"

namespace synodyne {

ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a, double b,
                             double x_tol, int max_iter) {
    if (!(a < b)) throw InvalidArgument("brent_minimize: need a < b");
    if (!(x_tol > 0.0)) throw InvalidArgument("brent_minimize: need x_tol > 0");

    constexpr double golden = 0.3819660112501051;  // 2 - phi
    double x = a + golden * (b - a);               // best point so far
    double w = x, v = x;                           // second and third best
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;  // last and second-to-last step sizes

    for (int iter = 1; iter <= max_iter; ++iter) {
        const double mid = 0.5 * (a + b);
        const double tol1 = x_tol + 1e-14 * std::abs(x);
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a))
            return {x, fx, iter};

        bool take_golden = true;
        if (std::abs(e) > tol1) {
            // Parabola through (v, fv), (w, fw), (x, fx).
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, mid - x);
                take_golden = false;
            }
        }
        if (take_golden) {
            e = (x >= mid) ? a - x : b - x;
            d = golden * e;
        }

        const double u = (std::abs(d) >= tol1) ? x + d : x + std::copysign(tol1, d);
        const double fu = f(u);
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    throw OptimizationFailure("brent_minimize: no convergence within iteration budget");
}

}  // namespace synodyne
