// Bit-identical results regardless of worker count: the parallel kernels
// partition work without changing any arithmetic or seed derivation.
#include <optional>
#include <vector>

#include "doctest.h"
#include "support/reference.hpp"
#include "synodyne/optimize.hpp"
#include "synodyne/parallel.hpp"
#include "synodyne/sim/force.hpp"
#include "synodyne/spectrum.hpp"

using namespace synodyne;
using namespace synodyne::sim;

namespace {

struct WorkerCapGuard {
    ~WorkerCapGuard() { set_worker_cap(0); }
};

template <typename F>
auto with_cap(int cap, F&& f) {
    set_worker_cap(cap);
    auto out = f();
    set_worker_cap(0);
    return out;
}

}  // namespace

TEST_CASE("worker count respects the programmatic cap") {
    WorkerCapGuard guard;
    set_worker_cap(1);
    CHECK(worker_count() == 1);
    set_worker_cap(0);
    CHECK(worker_count() >= 1);
}

TEST_CASE("spectrum tables are worker-count independent") {
    WorkerCapGuard guard;
    const SystemParams p = testref::reference_point();
    const std::vector<double> grid = linear_grid(0.05, 0.4, 257);
    const auto one = with_cap(1, [&] { return spectrum_table(p, grid); });
    const auto four = with_cap(4, [&] { return spectrum_table(p, grid); });
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].omega == four[i].omega);
        CHECK(one[i].c11 == four[i].c11);
        CHECK(one[i].re_c12 == four[i].re_c12);
        CHECK(one[i].im_c12 == four[i].im_c12);
        CHECK(one[i].c22 == four[i].c22);
        CHECK(one[i].eig_minus == four[i].eig_minus);
        CHECK(one[i].eig_plus == four[i].eig_plus);
        CHECK(one[i].hom_theta == four[i].hom_theta);
        CHECK(one[i].hom_min == four[i].hom_min);
    }
}

TEST_CASE("detector sweeps are worker-count independent") {
    WorkerCapGuard guard;
    const SystemParams p = testref::reference_point();
    const std::vector<double> grid = log_grid(1e-2, 1e2, 101);
    for (Objective obj : {Objective::noise, Objective::force}) {
        const auto one = with_cap(1, [&] { return sweep(p, grid, obj); });
        const auto four = with_cap(4, [&] { return sweep(p, grid, obj); });
        REQUIRE(one.size() == four.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].c_om == four[i].c_om);
            CHECK(one[i].pow_am == four[i].pow_am);
            CHECK(one[i].pow_pm == four[i].pow_pm);
            CHECK(one[i].objective == four[i].objective);
            CHECK(one[i].reference == four[i].reference);
        }
    }
}

TEST_CASE("force estimation is worker-count independent") {
    WorkerCapGuard guard;
    const SystemParams p = make_params(0.2, 0.01, 0.0, std::nullopt, 0.9);
    const LoTones tones = tones_from_spinor(optimal_force_spinor(p).spinor, 2.0, p.omega_m);
    SimConfig cfg;
    cfg.dt = 0.01;
    cfg.duration = 300.0;
    cfg.seed = 5;
    ForceProfile f;
    f.amplitude = 1.5;
    f.frequency = p.omega_m;

    const auto one = with_cap(1, [&] { return estimate_force(p, tones, f, cfg, 6); });
    const auto four = with_cap(4, [&] { return estimate_force(p, tones, f, cfg, 6); });
    CHECK(one.estimate == four.estimate);
    CHECK(one.se == four.se);
    CHECK(one.per_rep == four.per_rep);
}
