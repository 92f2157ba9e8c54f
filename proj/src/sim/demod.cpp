#include "synodyne/sim/demod.hpp"

#include <cmath>
#include <numbers>

#include "synodyne/errors.hpp"

namespace synodyne::sim {

TimeSeries demodulate_synodyne(const TimeSeries& ts, const LoTones& tones) {
    tones.validate();
    const std::vector<double>& am = ts.channel("X_AM_out");
    const std::vector<double>& pm = ts.channel("X_PM_out");
    if (am.size() != pm.size()) throw InvalidArgument("output channels differ in length");
    if (!(ts.dt > 0.0)) throw InvalidArgument("time series has no valid step");

    const double root_i = std::sqrt(tones.intensity());
    TimeSeries out;
    out.dt = ts.dt;
    out.t0 = ts.t0;
    out.names = {"Xi"};
    out.data.assign(1, std::vector<double>(am.size()));
    for (std::size_t k = 0; k < am.size(); ++k) {
        const double t = ts.t0 + static_cast<double>(k) * ts.dt;
        const cplx alpha = lo_amplitude(tones, t);
        out.data[0][k] = (alpha.real() * am[k] + alpha.imag() * pm[k]) / root_i;
    }
    return out;
}

std::vector<double> temporal_phase_components(const std::vector<double>& record, double dt,
                                              double omega, const std::vector<double>& xi_grid,
                                              double t0) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be > 0");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be > 0");
    const double span = static_cast<double>(record.size()) * dt;
    if (span < 100.0 * 2.0 * std::numbers::pi / omega) {
        throw InvalidArgument("record must span at least 100 cycles of omega");
    }

    // cos(omega t - xi) = cos(xi) cos(omega t) + sin(xi) sin(omega t): two
    // projections cover every requested phase exactly.
    double proj_cos = 0.0, proj_sin = 0.0;
    for (std::size_t k = 0; k < record.size(); ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        proj_cos += record[k] * std::cos(omega * t);
        proj_sin += record[k] * std::sin(omega * t);
    }
    proj_cos *= dt;
    proj_sin *= dt;

    std::vector<double> out(xi_grid.size());
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        out[i] = proj_cos * std::cos(xi_grid[i]) + proj_sin * std::sin(xi_grid[i]);
    }
    return out;
}

}  // namespace synodyne::sim
