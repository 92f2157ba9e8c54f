#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "support/reference.hpp"
#include "synodyne/errors.hpp"
#include "synodyne/sim/state_space.hpp"
#include "synodyne/spectrum.hpp"

using namespace synodyne;
using namespace synodyne::sim;

namespace {

SystemParams speed_variant(double c_om, double nbar) {
    return make_params(0.2, 0.01, nbar, std::nullopt, c_om);
}

}  // namespace

TEST_CASE("state-space realization") {
    const SystemParams p = testref::reference_point();
    const StateSpace ss = build_state_space(p);

    SUBCASE("noise routing and input spectra") {
        CHECK(ss.input_psd(0) == 0.5);
        CHECK(ss.input_psd(1) == 0.5);
        CHECK(ss.input_psd(2) == 0.5);
        CHECK(ss.input_psd(3) == 0.5);
        CHECK(ss.noise_map(0, 0) == std::sqrt(p.gamma_m));
        CHECK(ss.noise_map(2, 2) == std::sqrt(p.kappa));
        CHECK(ss.output_map(0, 2) == std::sqrt(p.kappa));
        CHECK(ss.feedthrough(0, 2) == -1.0);
        CHECK(ss.feedthrough(1, 3) == -1.0);

        SystemParams warm = p;
        warm.nbar = 0.5;
        const StateSpace warm_ss = build_state_space(warm);
        CHECK(warm_ss.input_psd(0) == 1.0);
        CHECK(warm_ss.input_psd(2) == 0.5);  // optical inputs stay vacuum
    }
    SUBCASE("detuned pump is rejected") {
        SystemParams detuned = p;
        detuned.delta = 0.05;
        CHECK_THROWS_AS(build_state_space(detuned), UnsupportedDetuning);
    }
    SUBCASE("drift eigenvalues are the bare poles at every coupling") {
        for (double c_om : {0.0, 0.3, 0.9, 2.0, 50.0}) {
            SystemParams q = p;
            q.g = c_om == 0.0 ? 0.0 : g_from_cooperativity(c_om, p.kappa, p.gamma_m);
            const auto eig = drift_eigenvalues(build_state_space(q));
            // sorted by (real, imag): cavity pair first, then the mechanical pair
            CHECK(std::abs(eig[0] - cplx(-0.5, 0.0)) < 1e-10);
            CHECK(std::abs(eig[1] - cplx(-0.5, 0.0)) < 1e-10);
            CHECK(std::abs(eig[2] - cplx(-p.gamma_m / 2, -p.omega_m)) < 1e-10);
            CHECK(std::abs(eig[3] - cplx(-p.gamma_m / 2, p.omega_m)) < 1e-10);
            for (const cplx& lam : eig) CHECK(lam.real() < 0.0);  // Hurwitz
        }
    }
    SUBCASE("zero coupling decouples the blocks exactly") {
        SystemParams off = p;
        off.g = 0.0;
        const StateSpace free_ss = build_state_space(off);
        CHECK(free_ss.drift(1, 2) == 0.0);
        CHECK(free_ss.drift(3, 0) == 0.0);
        CHECK(free_ss.drift.block<2, 2>(0, 2).isZero(0.0));
        CHECK(free_ss.drift.block<2, 2>(2, 0).isZero(0.0));
    }
}

TEST_CASE("resolvent gains reproduce the closed-form responses") {
    SUBCASE("dense grid around resonance at three couplings") {
        for (double c_om : {0.3, 0.9, 2.0}) {
            const SystemParams p = make_params(0.2, 0.002, 0.0, std::nullopt, c_om);
            const std::vector<double> grid = linear_grid(0.5 * p.omega_m, 1.5 * p.omega_m, 200);
            CHECK(transfer_function_check(build_state_space(p), p, grid) <= 1e-9);
        }
    }
    SUBCASE("wide grid, warm bath") {
        const SystemParams p = make_params(0.2, 0.002, 0.5, std::nullopt, 0.9);
        const std::vector<double> grid = linear_grid(0.01, 2.0, 150);
        CHECK(transfer_function_check(build_state_space(p), p, grid) <= 1e-9);
    }
    SUBCASE("uncoupled system deviates only at rounding level") {
        SystemParams off = testref::reference_point();
        off.g = 0.0;
        // All coupled gains vanish identically; the residual comes from the
        // all-pass cavity magnitude passing through the LU solve.
        const std::vector<double> grid = linear_grid(0.05, 1.0, 50);
        CHECK(transfer_function_check(build_state_space(off), off, grid) <= 1e-14);
    }
    SUBCASE("doubling the coupling quadruples the back-action gain") {
        const SystemParams p = testref::reference_point();
        SystemParams p2 = p;
        p2.g = 2.0 * p.g;
        const auto gain_at = [](const SystemParams& q, double omega) {
            const StateSpace ss = build_state_space(q);
            Eigen::Matrix4cd m =
                Eigen::Matrix4cd::Identity() * cplx(0.0, omega) - ss.drift.cast<cplx>();
            const Eigen::Matrix<cplx, 2, 4> h = ss.output_map.cast<cplx>() * m.inverse() *
                                                    ss.noise_map.cast<cplx>() +
                                                ss.feedthrough.cast<cplx>();
            return std::abs(h(1, 2));  // AM_in -> PM_out
        };
        const double ratio = gain_at(p2, p.omega_m) / gain_at(p, p.omega_m);
        CHECK(std::abs(ratio - 4.0) <= 1e-9);
    }
    SUBCASE("random parameter sets stay below the contract bound") {
        std::mt19937_64 rng(0x5eed0020);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            const SystemParams p =
                make_params(0.05 * std::pow(10.0, u(rng)), 1e-3 * std::pow(30.0, u(rng)),
                            2.0 * u(rng), std::nullopt, 0.05 * std::pow(100.0, u(rng)));
            const std::vector<double> grid = linear_grid(0.3 * p.omega_m, 2.0 * p.omega_m, 40);
            CHECK(transfer_function_check(build_state_space(p), p, grid) <= 1e-9);
        }
    }
}

TEST_CASE("speed-variant parameters used by the statistical oracles are valid") {
    for (double c_om : {0.3, 0.9, 2.0}) {
        for (double nbar : {0.0, 0.5}) {
            const SystemParams p = speed_variant(c_om, nbar);
            const StateSpace ss = build_state_space(p);
            CHECK(ss.suggested_warmup == 16.0 / p.gamma_m);
            const std::vector<double> grid = linear_grid(0.1, 0.3, 20);
            CHECK(transfer_function_check(ss, p, grid) <= 1e-9);
        }
    }
}
