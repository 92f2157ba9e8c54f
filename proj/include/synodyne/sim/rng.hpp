#pragma once

#include <cstdint>
#include <random>

namespace synodyne::sim {

// SplitMix64 mixing step. Used only to derive stream seeds, never as the
// sampling generator itself.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic stream splitting: every (master, stream) pair maps to an
// independent child seed. Repetition r of a run uses derive_seed(seed, r);
// input channel c of that repetition uses derive_seed(child, c). Results are
// therefore independent of scheduling order when runs execute in parallel.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Standard-normal sampler: mt19937_64 + Marsaglia polar transform. Both the
// engine and the transform are fully specified, so records are bit-identical
// across platforms and toolchains for a given seed.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

  private:
    double uniform() {  // [0, 1), 53-bit resolution
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace synodyne::sim
