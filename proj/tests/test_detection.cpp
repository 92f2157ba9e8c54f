#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/reference.hpp"
#include "synodyne/detection.hpp"
#include "synodyne/errors.hpp"
#include "synodyne/optimize.hpp"

using namespace synodyne;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("tone pairs map to the contracted detection spinors") {
    SUBCASE("symmetric tones: pure AM") {
        const LoSpinor s = spinor_from_tones({cplx(1, 0), cplx(1, 0), 0.2});
        CHECK(std::abs(s.am - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(s.pm) < 1e-15);
    }
    SUBCASE("antisymmetric tones: pure PM, quarter-cycle temporal phase") {
        const LoSpinor s = spinor_from_tones({cplx(1, 0), cplx(-1, 0), 0.2});
        CHECK(std::abs(s.am) < 1e-15);
        CHECK(std::abs(s.pm - cplx(0, 1)) < 1e-15);
    }
    SUBCASE("single sideband weighs AM and PM equally") {
        const LoSpinor s = spinor_from_tones({cplx(1, 0), cplx(0, 0), 0.2});
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(s.am - cplx(r, 0)) < 1e-15);
        CHECK(std::abs(s.pm - cplx(0, r)) < 1e-15);
    }
    SUBCASE("zero intensity is rejected") {
        CHECK_THROWS_AS(spinor_from_tones({cplx(0, 0), cplx(0, 0), 0.2}), ZeroIntensity);
    }
    SUBCASE("result is normalized for arbitrary tones") {
        std::mt19937_64 rng(0x5eed0001);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            const LoTones t{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), 0.2};
            if (t.intensity() == 0.0) continue;
            const LoSpinor s = spinor_from_tones(t);
            CHECK(std::abs(std::norm(s.am) + std::norm(s.pm) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("tones_from_spinor inverts the spinor map") {
    SUBCASE("contracted inverse examples") {
        const LoTones t1 = tones_from_spinor({cplx(1, 0), cplx(0, 0)}, 2.0, 0.2);
        CHECK(std::abs(t1.upper - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(t1.lower - cplx(1, 0)) < 1e-15);
        const LoTones t2 = tones_from_spinor({cplx(0, 0), cplx(0, 1)}, 2.0, 0.2);
        CHECK(std::abs(t2.upper - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(t2.lower - cplx(-1, 0)) < 1e-15);
    }
    SUBCASE("round trip on random spinors preserves spinor and intensity") {
        std::mt19937_64 rng(0x5eed0002);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::uniform_real_distribution<double> ui(0.1, 50.0);
        for (int i = 0; i < 100; ++i) {
            cplx am(u(rng), u(rng)), pm(u(rng), u(rng));
            const double n = std::sqrt(std::norm(am) + std::norm(pm));
            if (n == 0.0) continue;
            am /= n;
            pm /= n;
            const double intensity = ui(rng);
            const LoTones t = tones_from_spinor({am, pm}, intensity, 0.2);
            CHECK(std::abs(t.intensity() - intensity) < 1e-12 * intensity);
            const LoSpinor back = spinor_from_tones(t);
            CHECK(std::abs(back.am - am) < 1e-12);
            CHECK(std::abs(back.pm - pm) < 1e-12);
        }
    }
}

TEST_CASE("lo_amplitude realizes the two-tone waveform") {
    const double w = 0.2;
    for (double t : {0.0, 0.7, 3.9, 25.0}) {
        // Symmetric tones: 2 cos; antisymmetric: 2i sin.
        CHECK(std::abs(lo_amplitude({cplx(1, 0), cplx(1, 0), w}, t) -
                       cplx(2.0 * std::cos(w * t), 0.0)) < 1e-14);
        CHECK(std::abs(lo_amplitude({cplx(1, 0), cplx(-1, 0), w}, t) -
                       cplx(0.0, 2.0 * std::sin(w * t))) < 1e-14);
    }
    LoTones bad{cplx(1, 0), cplx(0, 0), 0.0};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    LoTones dark{cplx(0, 0), cplx(0, 0), 0.2};
    CHECK_THROWS_AS(dark.validate(), ZeroIntensity);
}

TEST_CASE("synodyne dc noise density") {
    const SystemParams p = testref::reference_point();
    const CovarianceMatrix c = covariance_at(p, p.omega_m);

    SUBCASE("axis spinors recover the diagonal") {
        CHECK(synodyne_psd_dc(c, {cplx(1, 0), cplx(0, 0)}) == c.c11);
        CHECK(synodyne_psd_dc(c, {cplx(0, 0), cplx(1, 0)}) == c.c22);
    }
    SUBCASE("optimal spinor reaches the lower covariance eigenvalue") {
        const SpinorOptimum opt = optimal_noise_spinor(c);
        CHECK(rel_diff(synodyne_psd_dc(c, opt.spinor), 0.2965723714291315) < 1e-12);
    }
    SUBCASE("defensive normalization: scaling the spinor changes nothing") {
        const LoSpinor s{cplx(0.3, -0.4), cplx(-0.1, 0.8)};
        const LoSpinor scaled{s.am * 7.3, s.pm * 7.3};
        CHECK(rel_diff(synodyne_psd_dc(c, s), synodyne_psd_dc(c, scaled)) < 1e-14);
        CHECK_THROWS_AS(synodyne_psd_dc(c, {cplx(0, 0), cplx(0, 0)}), ZeroIntensity);
    }
    SUBCASE("Rayleigh bound holds for random spinors across frequencies") {
        std::mt19937_64 rng(0x5eed0003);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (double w : {0.02, 0.1, 0.2, 0.31, 1.4}) {
            const CovarianceMatrix cw = covariance_at(p, w);
            const EigenvaluePair e = eigenvalues(cw);
            for (int i = 0; i < 50; ++i) {
                const LoSpinor s{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
                if (std::norm(s.am) + std::norm(s.pm) < 1e-3) continue;
                const double v = synodyne_psd_dc(cw, s);
                CHECK(v >= e.minus - 1e-12);
                CHECK(v <= e.plus + 1e-12);
            }
        }
    }
    SUBCASE("real spinors embed the homodyne detector") {
        std::mt19937_64 rng(0x5eed0004);
        std::uniform_real_distribution<double> th(0.0, std::numbers::pi);
        for (double w : {0.1, 0.2, 0.44}) {
            const CovarianceMatrix cw = covariance_at(p, w);
            for (int i = 0; i < 40; ++i) {
                const double theta = th(rng);
                const LoSpinor s{cplx(std::cos(theta), 0.0), cplx(std::sin(theta), 0.0)};
                CHECK(rel_diff(synodyne_psd_dc(cw, s), homodyne_psd(cw, theta)) < 1e-14);
            }
        }
    }
}

TEST_CASE("detection-time gauge shift leaves the figures of merit unchanged") {
    const SystemParams p = testref::reference_point();
    const CovarianceMatrix c = covariance_at(p, p.omega_m);
    const LoSpinor s{cplx(0.6, 0.2), cplx(-0.3, 0.7)};
    const double base_noise = synodyne_psd_dc(c, s);
    const double base_force = force_imprecision(p, s);
    for (int k = 0; k < 10; ++k) {
        const double psi = 0.37 + 0.61 * k;
        const LoSpinor shifted = time_shifted(s, psi);
        CHECK(rel_diff(std::norm(shifted.am) + std::norm(shifted.pm),
                       std::norm(s.am) + std::norm(s.pm)) < 1e-13);
        CHECK(rel_diff(synodyne_psd_dc(c, shifted), base_noise) < 1e-13);
        CHECK(rel_diff(force_imprecision(p, shifted), base_force) < 1e-13);
    }
}

TEST_CASE("force-measurement imprecision") {
    const SystemParams p = testref::reference_point();

    SUBCASE("phase homodyne benchmark value") {
        CHECK(rel_diff(homodyne_force_imprecision(p), 1.0490494025383146) < 1e-12);
        CHECK(rel_diff(force_imprecision(p, {cplx(0, 0), cplx(1, 0)}),
                       homodyne_force_imprecision(p)) < 1e-15);
    }
    SUBCASE("pure-AM detector sees no force") {
        CHECK_THROWS_AS(force_imprecision(p, {cplx(1, 0), cplx(0, 0)}), NoSignal);
    }
    SUBCASE("uncoupled system transduces nothing") {
        SystemParams off = p;
        off.g = 0.0;
        CHECK(std::isinf(force_imprecision(off, {cplx(0, 0), cplx(1, 0)})));
    }
    SUBCASE("very strong measurement approaches the mechanical-noise floor") {
        const SystemParams strong = with_cooperativity(p, 1e4);
        const ResponseSet r = responses(strong, p.omega_m);
        const double floor = 0.5 * (1.0 + std::norm(r.t_q) / std::norm(r.t_p)) * 0.5;
        const double v = optimal_force_spinor(strong).value;
        CHECK(rel_diff(v, floor) < 0.01);
    }
}

TEST_CASE("standard quantum limit over the measurement strength") {
    const SystemParams p = testref::reference_point();
    const SqlPoint s = sql(p);

    // Independent closed form: h(C) = A/C + B C + D in log-C coordinates.
    const double a_coef = ((p.kappa * p.kappa / 4 + p.omega_m * p.omega_m) *
                           (p.gamma_m * p.gamma_m / 16 + p.omega_m * p.omega_m)) /
                          (2 * p.kappa * p.kappa * p.omega_m * p.omega_m);
    const double b_coef = p.kappa * p.kappa / (8 * (p.kappa * p.kappa / 4 + p.omega_m * p.omega_m));
    const double d_coef = 0.5 * (1 + p.gamma_m * p.gamma_m / (8 * p.omega_m * p.omega_m));
    CHECK(rel_diff(s.c_om_star, std::sqrt(a_coef / b_coef)) < 1e-6);
    CHECK(rel_diff(s.s_sql, 2 * std::sqrt(a_coef * b_coef) + d_coef) < 1e-12);
    CHECK(s.c_om_star == doctest::Approx(0.5800018124971681).epsilon(1e-6));
    CHECK(s.s_sql == doctest::Approx(1.0000078124975587).epsilon(1e-12));

    SUBCASE("it is a genuine minimum of the homodyne imprecision") {
        CHECK(homodyne_force_imprecision(with_cooperativity(p, s.c_om_star / 2)) > s.s_sql);
        CHECK(homodyne_force_imprecision(with_cooperativity(p, s.c_om_star * 2)) > s.s_sql);
        CHECK(rel_diff(homodyne_force_imprecision(with_cooperativity(p, s.c_om_star)),
                       s.s_sql) < 1e-12);
    }
    SUBCASE("warming the bath raises the SQL") {
        SystemParams warm = p;
        warm.nbar = 1.0;
        CHECK(sql(warm).s_sql > s.s_sql);
        CHECK(sql(warm).s_sql == doctest::Approx(2.0000203124975586).epsilon(1e-10));
    }
    SUBCASE("the SQL barely moves with the mechanical linewidth") {
        SystemParams thin = p;
        thin.gamma_m = 0.001;
        CHECK(std::abs(sql(thin).s_sql - s.s_sql) / s.s_sql < 0.01);
    }
}
