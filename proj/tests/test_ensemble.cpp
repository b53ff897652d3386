// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <doctest.h>

#include "gmagic/ensemble.hpp"
#include "gmagic/errors.hpp"
#include "gmagic/stats.hpp"

using namespace gmagic;

TEST_SUITE_BEGIN("ensemble");

TEST_CASE("thermodynamic constant at the symmetric cut") {
    const double expected = std::log(8.0 - 4.0 * std::sqrt(3.0));
    CHECK(expected == doctest::Approx(0.0693365).epsilon(1e-5));
    CHECK(j_thermo(0.5) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("j_thermo is symmetric and vanishes at small fractions") {
    // Dyadic fractions have exact complements, so symmetry is bitwise there.
    CHECK(j_thermo(0.25) == j_thermo(0.75));
    CHECK(j_thermo(0.125) == j_thermo(0.875));
    CHECK(j_thermo(0.375) == j_thermo(0.625));
    // Generic fractions: the complement itself rounds, so compare to 1 ulp-ish.
    CHECK(j_thermo(0.3) == doctest::Approx(j_thermo(0.7)).epsilon(1e-14));
    CHECK(j_thermo(0.001) < 2e-3);
    CHECK(j_thermo(0.001) > 0.0);
    CHECK_THROWS_AS(j_thermo(0.0), InputError);
    CHECK_THROWS_AS(j_thermo(1.0), InputError);
}

TEST_CASE("quadrature agrees with the closed form") {
    for (double ell : {0.1, 0.25, 0.4, 0.5, 0.65}) {
        CHECK(j_quadrature(ell) == doctest::Approx(j_thermo(ell)).epsilon(1e-8));
    }
    CHECK(j_quadrature(1e-4) < 1e-3);
}

TEST_CASE("j_thermo is maximal at the symmetric cut on a 99-point grid") {
    double best = -1.0;
    double best_ell = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double ell = i / 100.0;
        const double v = j_thermo(ell);
        if (v > best) {
            best = v;
            best_ell = ell;
        }
    }
    CHECK(best_ell == doctest::Approx(0.5));
}

TEST_CASE("limiting density: support, edge cases, normalization") {
    const LimitDensity quarter(0.25);
    CHECK(quarter.x_tilde == doctest::Approx(0.75).epsilon(1e-15));

    const LimitDensity d(0.3);
    CHECK(rho_limit(d, -0.1) == 0.0);
    CHECK(rho_limit(d, d.x_tilde + 0.01) == 0.0);
    CHECK(rho_limit(d, 0.2) > 0.0);

    for (double ell : {0.1, 0.25, 0.5}) {
        const LimitDensity dens(ell);
        // Riemann check of the closed-form CDF against the density.
        const int n = 4000;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = dens.x_tilde * (i + 0.5) / n;
            acc += rho_limit(dens, x) * dens.x_tilde / n;
        }
        CHECK(rho_limit_cdf(dens, dens.x_tilde) == doctest::Approx(1.0).epsilon(1e-6));
        // The interior singularities integrate; crude Riemann gets within a few percent.
        CHECK(acc == doctest::Approx(1.0).epsilon(0.05));
        // The closed-form CDF differentiates back to the density away from
        // the endpoints, and is monotone.
        double prev = 0.0;
        for (double frac : {0.2, 0.45, 0.7, 0.9}) {
            const double x = frac * dens.x_tilde;
            const double h = 1e-6 * dens.x_tilde;
            const double deriv =
                (rho_limit_cdf(dens, x + h) - rho_limit_cdf(dens, x - h)) / (2.0 * h);
            CHECK(deriv == doctest::Approx(rho_limit(dens, x)).epsilon(1e-6));
            const double cdf = rho_limit_cdf(dens, x);
            CHECK(cdf > prev);
            prev = cdf;
        }
    }
}

TEST_CASE("sampled density approaches the thermodynamic value") {
    const EnsembleEstimate est = sample_nonlocal_density(7, 64, 32, 100, 2);
    CHECK(est.samples == 100);
    CHECK(est.ell == doctest::Approx(0.5));
    CHECK(std::abs(est.mean - j_thermo(0.5)) < 0.05 * j_thermo(0.5));
    CHECK(est.std_error > 0.0);

    // Tiny subsystem fraction carries almost no nonlocal magic per site.
    const EnsembleEstimate small = sample_nonlocal_density(7, 48, 1, 40, 2);
    CHECK(small.mean < 0.01);
}

TEST_CASE("sampling is deterministic and worker-count independent") {
    const EnsembleEstimate a = sample_nonlocal_density(1234, 24, 12, 25, 1);
    const EnsembleEstimate b = sample_nonlocal_density(1234, 24, 12, 25, 2);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK_THROWS_AS(sample_nonlocal_density(1, 8, 0, 5), InputError);
}

TEST_CASE("pooled mode distribution matches the limiting density (KS)") {
    const int sites = 48;
    const std::vector<double> xs = sample_mode_squares(11, sites, sites / 2, 40, 2);
    const LimitDensity d(0.5);
    const double ks = ks_distance(xs, [&](double x) { return rho_limit_cdf(d, x); });
    CHECK(ks < 0.08);
}

TEST_SUITE_END();
