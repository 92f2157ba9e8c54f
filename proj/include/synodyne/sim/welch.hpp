#pragma once

#include <cstddef>
#include <vector>

#include "synodyne/response.hpp"  // cplx

namespace synodyne::sim {

// Averaged-periodogram spectral estimate. Values are TWO-SIDED densities in
// angular frequency, listed on the one-sided grid omega_k = 2 pi k / (N dt),
// k = 0..N/2; vacuum quadrature records therefore estimate 1/2 per bin.
struct Spectrum {
    std::vector<double> omega;
    std::vector<double> psd;
    std::vector<double> se;  // per-bin standard error (chi^2 edge bins doubled)
    double n_eff = 0.0;      // effective independent segment count
    int segments = 0;

    // Zero-frequency density estimated from the nearest clean bins (2 and 3):
    // per-segment mean removal modifies bins 0 and 1, never bin >= 2. Valid
    // when the density is flat over a few bin widths, i.e. the segment span
    // well exceeds the correlation time of the record.
    double dc() const;

    // Standard error of dc(). Adjacent Hann bins share window leakage, so the
    // two periodograms are correlated with coefficient (2/3)^2 = 4/9; the
    // average of bins 2 and 3 is narrower than either bin but not by sqrt(2).
    double dc_se() const;
};

// Cross density S_xy(omega) = E[x~(omega) conj(y~(omega))] dt / sum w^2 on
// the same grid, with per-bin standard errors for the real and imaginary
// parts (Gaussian cross-spectrum variance formulas using the estimated auto
// spectra).
struct CrossSpectrum {
    std::vector<double> omega;
    std::vector<cplx> csd;
    std::vector<double> se_re;
    std::vector<double> se_im;
    double n_eff = 0.0;
    int segments = 0;
};

// Welch estimate: Hann window, per-segment mean removal, segment hop
// round(N * (1 - overlap_fraction)). segment_length must be even, >= 8 and
// <= record length; overlap_fraction in [0, 0.9]. Throws InvalidArgument
// otherwise. n_eff accounts for inter-segment window correlation.
Spectrum psd_welch(const std::vector<double>& record, double dt, std::size_t segment_length,
                   double overlap_fraction = 0.5);

CrossSpectrum cross_psd_welch(const std::vector<double>& x, const std::vector<double>& y,
                              double dt, std::size_t segment_length,
                              double overlap_fraction = 0.5);

// Index of the grid bin closest to omega (uniform grid).
std::size_t nearest_bin(const std::vector<double>& omega_grid, double omega);

}  // namespace synodyne::sim
