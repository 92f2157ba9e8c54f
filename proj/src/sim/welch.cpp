#include "synodyne/sim/welch.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "synodyne/errors.hpp"

namespace synodyne::sim {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution on a plan's
// own buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct SegmentLayout {
    std::size_t n;       // segment length
    std::size_t hop;     // segment step
    std::size_t count;   // number of segments
    std::vector<double> window;
    double window_ssq;   // sum w^2
    double n_eff;
};

SegmentLayout make_layout(std::size_t record_len, double dt, std::size_t n, double overlap) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be > 0");
    if (n < 8 || n % 2 != 0) throw InvalidArgument("segment_length must be even and >= 8");
    if (n > record_len) throw InvalidArgument("record shorter than one segment");
    if (!(overlap >= 0.0 && overlap <= 0.9)) {
        throw InvalidArgument("overlap_fraction must lie in [0, 0.9]");
    }

    SegmentLayout lay;
    lay.n = n;
    lay.hop = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * (1.0 - overlap))));
    lay.count = 1 + (record_len - n) / lay.hop;

    lay.window.resize(n);
    lay.window_ssq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                  static_cast<double>(n)));
        lay.window[j] = w;
        lay.window_ssq += w * w;
    }

    // Effective independent segment count: overlapping Hann segments are
    // correlated; the periodogram correlation at lag m*hop is the squared
    // normalized window overlap.
    const double k = static_cast<double>(lay.count);
    double denom = 1.0;
    for (std::size_t m = 1; m < lay.count && m * lay.hop < n; ++m) {
        double dot = 0.0;
        for (std::size_t j = 0; j + m * lay.hop < n; ++j) {
            dot += lay.window[j] * lay.window[j + m * lay.hop];
        }
        const double rho = dot / lay.window_ssq;
        denom += 2.0 * (1.0 - static_cast<double>(m) / k) * rho * rho;
    }
    lay.n_eff = k / denom;
    return lay;
}

class SegmentFft {
  public:
    explicit SegmentFft(std::size_t n) : n_(n) {
        in_ = fftw_alloc_real(n);
        out_ = fftw_alloc_complex(n / 2 + 1);
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
    }
    ~SegmentFft() {
        {
            std::lock_guard lock(planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }
    SegmentFft(const SegmentFft&) = delete;
    SegmentFft& operator=(const SegmentFft&) = delete;

    // Windowed, mean-removed transform of record[start, start + n).
    void transform(const std::vector<double>& record, std::size_t start,
                   const std::vector<double>& window) {
        double mean = 0.0;
        for (std::size_t j = 0; j < n_; ++j) mean += record[start + j];
        mean /= static_cast<double>(n_);
        for (std::size_t j = 0; j < n_; ++j) in_[j] = (record[start + j] - mean) * window[j];
        fftw_execute(plan_);
    }

    cplx bin(std::size_t k) const { return {out_[k][0], out_[k][1]}; }

  private:
    std::size_t n_;
    double* in_;
    fftw_complex* out_;
    fftw_plan plan_;
};

}  // namespace

double Spectrum::dc() const {
    if (psd.size() < 4) throw InvalidArgument("too few bins for a dc estimate");
    return 0.5 * (psd[2] + psd[3]);
}

double Spectrum::dc_se() const {
    if (se.size() < 4) throw InvalidArgument("too few bins for a dc estimate");
    constexpr double rho = 4.0 / 9.0;
    return 0.5 * std::sqrt(se[2] * se[2] + se[3] * se[3] + 2.0 * rho * se[2] * se[3]);
}

std::size_t nearest_bin(const std::vector<double>& omega_grid, double omega) {
    if (omega_grid.size() < 2) throw InvalidArgument("grid too small");
    const double spacing = omega_grid[1] - omega_grid[0];
    const auto k = static_cast<long long>(std::llround(omega / spacing));
    return static_cast<std::size_t>(
        std::clamp<long long>(k, 0, static_cast<long long>(omega_grid.size()) - 1));
}

Spectrum psd_welch(const std::vector<double>& record, double dt, std::size_t segment_length,
                   double overlap_fraction) {
    const SegmentLayout lay = make_layout(record.size(), dt, segment_length, overlap_fraction);
    const std::size_t bins = lay.n / 2 + 1;

    std::vector<double> accum(bins, 0.0);
    SegmentFft fft(lay.n);
    for (std::size_t s = 0; s < lay.count; ++s) {
        fft.transform(record, s * lay.hop, lay.window);
        for (std::size_t k = 0; k < bins; ++k) accum[k] += std::norm(fft.bin(k));
    }

    Spectrum sp;
    sp.segments = static_cast<int>(lay.count);
    sp.n_eff = lay.n_eff;
    sp.omega.resize(bins);
    sp.psd.resize(bins);
    sp.se.resize(bins);
    const double norm = dt / (lay.window_ssq * static_cast<double>(lay.count));
    const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(lay.n) * dt);
    for (std::size_t k = 0; k < bins; ++k) {
        sp.omega[k] = d_omega * static_cast<double>(k);
        sp.psd[k] = accum[k] * norm;
        const double edge = (k == 0 || k == bins - 1) ? 2.0 : 1.0;
        sp.se[k] = sp.psd[k] * std::sqrt(edge / sp.n_eff);
    }
    return sp;
}

CrossSpectrum cross_psd_welch(const std::vector<double>& x, const std::vector<double>& y,
                              double dt, std::size_t segment_length, double overlap_fraction) {
    if (x.size() != y.size()) throw InvalidArgument("cross records must have equal length");
    const SegmentLayout lay = make_layout(x.size(), dt, segment_length, overlap_fraction);
    const std::size_t bins = lay.n / 2 + 1;

    std::vector<cplx> accum(bins, cplx(0.0, 0.0));
    std::vector<double> accum_xx(bins, 0.0), accum_yy(bins, 0.0);
    SegmentFft fx(lay.n), fy(lay.n);
    for (std::size_t s = 0; s < lay.count; ++s) {
        fx.transform(x, s * lay.hop, lay.window);
        fy.transform(y, s * lay.hop, lay.window);
        for (std::size_t k = 0; k < bins; ++k) {
            const cplx a = fx.bin(k), b = fy.bin(k);
            accum[k] += a * std::conj(b);
            accum_xx[k] += std::norm(a);
            accum_yy[k] += std::norm(b);
        }
    }

    CrossSpectrum cs;
    cs.segments = static_cast<int>(lay.count);
    cs.n_eff = lay.n_eff;
    cs.omega.resize(bins);
    cs.csd.resize(bins);
    cs.se_re.resize(bins);
    cs.se_im.resize(bins);
    const double norm = dt / (lay.window_ssq * static_cast<double>(lay.count));
    const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(lay.n) * dt);
    for (std::size_t k = 0; k < bins; ++k) {
        cs.omega[k] = d_omega * static_cast<double>(k);
        cs.csd[k] = accum[k] * norm;
        const double sxx = accum_xx[k] * norm;
        const double syy = accum_yy[k] * norm;
        const double re = cs.csd[k].real(), im = cs.csd[k].imag();
        const double edge = (k == 0 || k == bins - 1) ? 2.0 : 1.0;
        cs.se_re[k] =
            std::sqrt(std::max(0.0, sxx * syy + re * re - im * im) * edge / (2.0 * cs.n_eff));
        // dc / Nyquist bins of real records are purely real.
        cs.se_im[k] = (k == 0 || k == bins - 1)
                          ? 0.0
                          : std::sqrt(std::max(0.0, sxx * syy - re * re + im * im) /
                                      (2.0 * cs.n_eff));
    }
    return cs;
}

}  // namespace synodyne::sim
