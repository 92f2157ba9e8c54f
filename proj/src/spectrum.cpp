#include "synodyne/spectrum.hpp"

#include <cmath>

#include "synodyne/errors.hpp"
#include "synodyne/parallel.hpp"

namespace synodyne {

namespace {

SpectrumRow spectrum_row(const SystemParams& p, double omega) {
    const CovarianceMatrix c = covariance_at(p, omega);
    const EigenvaluePair e = eigenvalues(c);
    const HomodyneMin h = min_homodyne(c);
    SpectrumRow row;
    row.omega = omega;
    row.c11 = c.c11;
    row.re_c12 = c.c12.real();
    row.im_c12 = c.c12.imag();
    row.c22 = c.c22;
    row.eig_minus = e.minus;
    row.eig_plus = e.plus;
    row.hom_theta = h.theta;
    row.hom_min = h.value;
    return row;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidArgument("empty frequency grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidArgument("frequency grid must be strictly increasing");
}

}  // namespace

std::vector<SpectrumRow> spectrum_table_serial(const SystemParams& p,
                                               const std::vector<double>& omega_grid) {
    p.validate();
    require_resonant_pump(p);
    check_grid(omega_grid);
    std::vector<SpectrumRow> rows(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i)
        rows[i] = spectrum_row(p, omega_grid[i]);
    return rows;
}

std::vector<SpectrumRow> spectrum_table(const SystemParams& p,
                                        const std::vector<double>& omega_grid) {
    p.validate();
    require_resonant_pump(p);
    check_grid(omega_grid);
    std::vector<SpectrumRow> rows(omega_grid.size());
    const auto count = static_cast<std::ptrdiff_t>(omega_grid.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::ptrdiff_t i = 0; i < count; ++i)
        rows[i] = spectrum_row(p, omega_grid[i]);
    return rows;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw InvalidArgument("linear_grid: need n >= 2 and hi > lo");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo) || !(lo > 0.0))
        throw InvalidArgument("log_grid: need n >= 2 and hi > lo > 0");
    std::vector<double> grid(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> resonance_grid(double omega_m, double half_width, int n) {
    if (n < 3 || n % 2 == 0)
        throw InvalidArgument("resonance_grid: need odd n >= 3");
    if (!(omega_m > 0.0) || !(half_width > 0.0) || !(half_width < 1.0))
        throw InvalidArgument("resonance_grid: need omega_m > 0 and half_width in (0, 1)");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        const double frac = -half_width + 2.0 * half_width * static_cast<double>(i) / (n - 1);
        grid[i] = omega_m * (1.0 + frac);
    }
    return grid;
}

}  // namespace synodyne
