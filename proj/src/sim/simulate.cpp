#include "synodyne/sim/simulate.hpp"

#include <cmath>
#include <limits>

#include "synodyne/errors.hpp"
#include "synodyne/sim/rng.hpp"

namespace synodyne::sim {

void ForceProfile::validate() const {
    if (!std::isfinite(amplitude) || !std::isfinite(frequency) || !std::isfinite(phase)) {
        throw InvalidParameter("force profile must be finite");
    }
    if (amplitude < 0.0) throw InvalidParameter("force amplitude must be >= 0");
    if (frequency <= 0.0) throw InvalidParameter("force frequency must be > 0");
}

void SimConfig::validate() const {
    if (!std::isfinite(dt) || dt <= 0.0) throw InvalidParameter("dt must be > 0");
    if (!std::isfinite(duration) || duration < dt) {
        throw InvalidParameter("duration must cover at least one step");
    }
    if (segments < 1) throw InvalidParameter("segments must be >= 1");
    if (!std::isfinite(warmup)) throw InvalidParameter("warmup must be finite");
    if (force) force->validate();
}

const std::vector<double>& TimeSeries::channel(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return data[i];
    }
    throw InvalidArgument("no channel named '" + std::string(name) + "'");
}

TimeSeries simulate(const StateSpace& ss, const SimConfig& cfg) {
    cfg.validate();

    double eig_scale = 0.0;
    for (const cplx& lam : drift_eigenvalues(ss)) eig_scale = std::max(eig_scale, std::abs(lam));
    if (eig_scale * cfg.dt > kMaxEigStep) {
        throw StepTooLarge("dt = " + std::to_string(cfg.dt) +
                           " too coarse: |eig(A)|*dt = " + std::to_string(eig_scale * cfg.dt) +
                           " exceeds " + std::to_string(kMaxEigStep));
    }

    const double warmup = cfg.warmup < 0.0 ? ss.suggested_warmup : cfg.warmup;
    const auto n_warm = static_cast<std::size_t>(std::llround(warmup / cfg.dt));
    const auto n_rec = static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));
    if (n_rec == 0) throw InvalidParameter("duration shorter than one step");

    GaussianStream streams[4] = {
        GaussianStream(derive_seed(cfg.seed, 0)), GaussianStream(derive_seed(cfg.seed, 1)),
        GaussianStream(derive_seed(cfg.seed, 2)), GaussianStream(derive_seed(cfg.seed, 3))};
    Eigen::Vector4d sigma;
    for (int c = 0; c < 4; ++c) sigma(c) = std::sqrt(ss.input_psd(c) / cfg.dt);

    TimeSeries ts;
    ts.dt = cfg.dt;
    ts.t0 = static_cast<double>(n_warm) * cfg.dt;
    ts.names = {"X_AM_out", "X_PM_out"};
    ts.data.assign(2, std::vector<double>(n_rec));

    const Eigen::Matrix4d& a = ss.drift;
    const Eigen::Vector4d b_diag = ss.noise_map.diagonal();
    const Eigen::Matrix<double, 2, 4>& c_map = ss.output_map;
    const Eigen::Matrix<double, 2, 4>& d_map = ss.feedthrough;
    const bool driven = cfg.force.has_value();
    const double f_amp = driven ? cfg.force->amplitude : 0.0;
    const double f_freq = driven ? cfg.force->frequency : 0.0;
    const double f_phase = driven ? cfg.force->phase : 0.0;

    Eigen::Vector4d x = Eigen::Vector4d::Zero();
    Eigen::Vector4d xi;
    const std::size_t n_total = n_warm + n_rec;
    for (std::size_t k = 0; k < n_total; ++k) {
        for (int c = 0; c < 4; ++c) xi(c) = sigma(c) * streams[c]();
        if (k >= n_warm) {
            const Eigen::Vector2d out = c_map * x + d_map * xi;
            ts.data[0][k - n_warm] = out(0);
            ts.data[1][k - n_warm] = out(1);
        }
        Eigen::Vector4d dx = a * x;
        if (driven) {
            const double t = static_cast<double>(k) * cfg.dt;
            dx(1) += f_amp * std::cos(f_freq * t + f_phase);
        }
        x += cfg.dt * dx + cfg.dt * b_diag.cwiseProduct(xi);
    }

    if (!x.allFinite()) {
        throw NumericalFailure("integration diverged: non-finite state");
    }
    return ts;
}

}  // namespace synodyne::sim
