#include "synodyne/optimize.hpp"

#include <cmath>
#include <numbers>

#include "synodyne/errors.hpp"
#include "synodyne/parallel.hpp"
#include "synodyne/response.hpp"

namespace synodyne {

namespace {

// Common phase construction: am real >= 0, arg(pm) = arg(c12) + pi.
LoSpinor phased(double mag_am, double mag_pm, const cplx& c12) {
    const double phase = std::arg(c12) + std::numbers::pi;
    return {cplx(mag_am, 0.0), std::polar(mag_pm, phase)};
}

}  // namespace

SpinorOptimum optimal_noise_spinor(const CovarianceMatrix& c) {
    const double r = std::abs(c.c12);
    const EigenvaluePair e = eigenvalues(c);
    if (r == 0.0) {
        // Degenerate: pick the quieter quadrature, ties toward AM.
        if (c.c11 <= c.c22) return {{cplx(1.0, 0.0), cplx(0.0, 0.0)}, c.c11};
        return {{cplx(0.0, 0.0), cplx(1.0, 0.0)}, c.c22};
    }
    // Bottom eigenvector of [[c11, -r], [-r, c22]] is (r, c11 - minus);
    // both components nonnegative since minus <= c11.
    const double m = r;
    const double n = c.c11 - e.minus;
    const double norm = std::hypot(m, n);
    return {phased(m / norm, n / norm, c.c12), e.minus};
}

SpinorOptimum optimal_force_spinor(const SystemParams& p) {
    p.validate();
    require_resonant_pump(p);
    if (p.g == 0.0) throw NoTransduction("g = 0: the meter never sees the mechanics");
    const CovarianceMatrix c = covariance_at(p, p.omega_m);
    const double r = std::abs(c.c12);
    const double norm = std::hypot(r, c.c11);
    const LoSpinor s = phased(r / norm, c.c11 / norm, c.c12);
    const double tp2 = std::norm(responses(p, p.omega_m).t_p);
    const double value = (c.c22 - r * r / c.c11) / (2.0 * tp2);
    return {s, value};
}

namespace {

SweepRow sweep_row(const SystemParams& base, double c_om, Objective objective) {
    const SystemParams p = with_cooperativity(base, c_om);
    SweepRow row;
    row.c_om = c_om;
    if (objective == Objective::noise) {
        const CovarianceMatrix c = covariance_at(p, p.omega_m);
        const SpinorOptimum opt = optimal_noise_spinor(c);
        row.pow_am = std::norm(opt.spinor.am);
        row.pow_pm = std::norm(opt.spinor.pm);
        row.objective = opt.value;
        row.reference = eigenvalues(c).minus;
    } else {
        const SpinorOptimum opt = optimal_force_spinor(p);
        row.pow_am = std::norm(opt.spinor.am);
        row.pow_pm = std::norm(opt.spinor.pm);
        row.objective = opt.value;
        row.reference = homodyne_force_imprecision(p);
    }
    return row;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidArgument("empty cooperativity grid");
    double prev = 0.0;
    for (double c : grid) {
        if (!(c > prev)) throw InvalidArgument(
            "cooperativity grid must be positive and strictly increasing");
        prev = c;
    }
}

}  // namespace

std::vector<SweepRow> sweep_serial(const SystemParams& base,
                                   const std::vector<double>& c_om_grid,
                                   Objective objective) {
    base.validate();
    require_resonant_pump(base);
    check_grid(c_om_grid);
    std::vector<SweepRow> rows(c_om_grid.size());
    for (std::size_t i = 0; i < c_om_grid.size(); ++i)
        rows[i] = sweep_row(base, c_om_grid[i], objective);
    return rows;
}

std::vector<SweepRow> sweep(const SystemParams& base, const std::vector<double>& c_om_grid,
                            Objective objective) {
    base.validate();
    require_resonant_pump(base);
    check_grid(c_om_grid);
    std::vector<SweepRow> rows(c_om_grid.size());
    const auto count = static_cast<std::ptrdiff_t>(c_om_grid.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::ptrdiff_t i = 0; i < count; ++i)
        rows[i] = sweep_row(base, c_om_grid[i], objective);
    return rows;
}

std::vector<double> default_sweep_grid() {
    constexpr int n = 32;
    std::vector<double> grid(n);
    const double lo = std::log10(1e-2), hi = std::log10(1e2);
    for (int i = 0; i < n; ++i)
        grid[i] = std::pow(10.0, lo + (hi - lo) * i / (n - 1));
    return grid;
}

}  // namespace synodyne
