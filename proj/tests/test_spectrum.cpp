#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "support/reference.hpp"
#include "synodyne/covariance.hpp"
#include "synodyne/errors.hpp"
#include "synodyne/spectrum.hpp"

using namespace synodyne;

TEST_CASE("grid builders") {
    SUBCASE("linear grid hits both endpoints exactly") {
        const std::vector<double> g = linear_grid(0.1, 0.3, 5);
        REQUIRE(g.size() == 5);
        CHECK(g.front() == 0.1);
        CHECK(g.back() == 0.3);
        CHECK(g[2] == doctest::Approx(0.2).epsilon(1e-15));
        for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    }
    SUBCASE("log grid is geometric and positive") {
        const std::vector<double> g = log_grid(1e-2, 1e2, 9);
        REQUIRE(g.size() == 9);
        CHECK(g.front() == doctest::Approx(1e-2).epsilon(1e-14));
        CHECK(g.back() == doctest::Approx(1e2).epsilon(1e-14));
        CHECK(g[4] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), InvalidArgument);
        CHECK_THROWS_AS(log_grid(-1.0, 1.0, 5), InvalidArgument);
    }
    SUBCASE("resonance grid centers exactly on the mechanical frequency") {
        const std::vector<double> g = resonance_grid(0.2, 0.05, 401);
        REQUIRE(g.size() == 401);
        CHECK(g[200] == 0.2);  // exact, not approximate
        CHECK(g.front() == doctest::Approx(0.2 * 0.95).epsilon(1e-14));
        CHECK(g.back() == doctest::Approx(0.2 * 1.05).epsilon(1e-14));
        for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    }
    SUBCASE("degenerate grid requests are rejected") {
        CHECK_THROWS_AS(linear_grid(0.3, 0.1, 5), InvalidArgument);
        CHECK_THROWS_AS(linear_grid(0.1, 0.3, 1), InvalidArgument);
        CHECK_THROWS_AS(resonance_grid(0.2, 0.05, 4), InvalidArgument);   // even count
        CHECK_THROWS_AS(resonance_grid(0.2, 1.5, 5), InvalidArgument);    // width >= 1
        CHECK_THROWS_AS(resonance_grid(-0.2, 0.05, 5), InvalidArgument);
    }
}

TEST_CASE("spectrum table") {
    const SystemParams p = testref::reference_point();

    SUBCASE("row at resonance carries the pinned covariance summary") {
        const std::vector<SpectrumRow> rows = spectrum_table(p, {0.1, p.omega_m});
        REQUIRE(rows.size() == 2);
        const SpectrumRow& r = rows[1];
        CHECK(r.omega == p.omega_m);
        CHECK(r.c11 == 0.5);
        CHECK(r.re_c12 == doctest::Approx(0.0019396430496466728).epsilon(1e-12));
        CHECK(r.im_c12 == doctest::Approx(0.7758572198578931).epsilon(1e-12));
        CHECK(r.c22 == doctest::Approx(3.2556502117878408).epsilon(1e-12));
        CHECK(r.eig_minus == doctest::Approx(0.2965723714291315).epsilon(1e-12));
        CHECK(r.eig_plus == doctest::Approx(3.4590778403587095).epsilon(1e-12));
        CHECK(r.hom_theta == doctest::Approx(3.1408887755141084).epsilon(1e-12));
        CHECK(r.hom_min == doctest::Approx(0.4999986347275571).epsilon(1e-12));
        CHECK(rows[0].hom_min == doctest::Approx(0.48868942451447384).epsilon(1e-12));
    }
    SUBCASE("rows agree with the direct covariance evaluation") {
        const std::vector<double> grid = linear_grid(0.02, 1.2, 37);
        const std::vector<SpectrumRow> rows = spectrum_table(p, grid);
        REQUIRE(rows.size() == grid.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const CovarianceMatrix c = covariance_at(p, grid[i]);
            CHECK(rows[i].c11 == c.c11);
            CHECK(rows[i].re_c12 == c.c12.real());
            CHECK(rows[i].im_c12 == c.c12.imag());
            CHECK(rows[i].c22 == c.c22);
            CHECK(rows[i].eig_minus == eigenvalues(c).minus);
            CHECK(rows[i].hom_min == min_homodyne(c).value);
        }
    }
    SUBCASE("grids must be strictly increasing") {
        CHECK_THROWS_AS(spectrum_table(p, {}), InvalidArgument);
        CHECK_THROWS_AS(spectrum_table(p, {0.2, 0.2}), InvalidArgument);
        CHECK_THROWS_AS(spectrum_table(p, {0.3, 0.2}), InvalidArgument);
    }
    SUBCASE("parallel and serial tables are bit-identical") {
        const std::vector<double> grid = resonance_grid(p.omega_m, 0.5, 401);
        const std::vector<SpectrumRow> par = spectrum_table(p, grid);
        const std::vector<SpectrumRow> ser = spectrum_table_serial(p, grid);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(std::memcmp(&par[i], &ser[i], sizeof(SpectrumRow)) == 0);
        }
    }
}
