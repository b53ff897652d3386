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
#include <vector>

#include <doctest.h>

#include "gmagic/errors.hpp"
#include "gmagic/magic.hpp"
#include "gmagic/oracle.hpp"
#include "reference_helpers.hpp"

using namespace gmagic;
using gmagic_tests::random_pure_state;

namespace {

EntanglementSpectrum random_spectrum(Rng &rng, int modes) {
    std::vector<double> nus;
    for (int k = 0; k < modes; ++k) nus.push_back(rng.uniform());
    return EntanglementSpectrum(std::move(nus));
}

// F_alpha by direct use of the public minor API, independent of the internal
// enumeration order and determinant kernel.
double f_alpha_by_minors(const CovarianceMatrix &gamma, int alpha) {
    const int d = gamma.dim();
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < d; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        if (support.size() % 2 != 0) continue;
        const double det = principal_minor_det(gamma.gamma(), support);
        double term = 1.0;
        for (int e = 0; e < alpha; ++e) term *= det;
        total += term;
    }
    return total;
}

}  // namespace

TEST_SUITE_BEGIN("magic");

TEST_CASE("sre_exact: vacuum is a stabilizer state") {
    for (int sites : {1, 2, 4}) {
        CHECK(sre_exact(vacuum(sites), 2.0).value == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(sre_exact(vacuum(sites), 3.0).value == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("sre_exact: pair state at phi = pi/8 gives log(4/3)") {
    const Eigen::MatrixXd g =
        oracle::covariance_of(oracle::two_site_pair_state(std::numbers::pi / 8));
    const CovarianceMatrix gamma{SkewMatrix(g)};
    CHECK(sre_exact(gamma, 2.0).value ==
          doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));
    CHECK(std::log(4.0 / 3.0) == doctest::Approx(0.2876820724).epsilon(1e-9));
}

TEST_CASE("sre_exact matches the dense Pauli-string oracle") {
    Rng rng(71);
    for (int sites : {2, 3}) {
        for (int trial = 0; trial < 4; ++trial) {
            const CovarianceMatrix gamma = random_pure_state(rng, sites);
            const oracle::Vector psi = oracle::state_of_covariance(gamma.mat());
            for (double alpha : {2.0, 3.0}) {
                const double dense = oracle::sre_from_state(psi, alpha);
                CHECK(sre_exact(gamma, alpha).value == doctest::Approx(dense).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("sre_exact: fractional alpha stays consistent with the oracle") {
    Rng rng(72);
    const CovarianceMatrix gamma = random_pure_state(rng, 2);
    const oracle::Vector psi = oracle::state_of_covariance(gamma.mat());
    CHECK(sre_exact(gamma, 0.5).value ==
          doctest::Approx(oracle::sre_from_state(psi, 0.5)).epsilon(1e-10));
}

TEST_CASE("sre_exact guards") {
    Rng rng(9);
    const CovarianceMatrix gamma = random_pure_state(rng, 2);
    CHECK_THROWS_AS(sre_exact(gamma, 1.0), InputError);
    CHECK_THROWS_AS(sre_exact(gamma, -2.0), InputError);
    CHECK_THROWS_AS(sre_exact(random_pure_state(rng, 9), 2.0), ResourceError);
    const SkewMatrix mixed(0.5 * vacuum(2).mat());
    CHECK_THROWS_AS(sre_exact(CovarianceMatrix(mixed), 2.0), ContractError);
}

TEST_CASE("sre_exact is not invariant under generic global rotations") {
    Rng rng(13);
    const CovarianceMatrix gamma = random_pure_state(rng, 3);
    const CovarianceMatrix rotated = apply_orthogonal(gamma, haar_special_orthogonal(rng, 6));
    CHECK(std::abs(sre_exact(gamma, 2.0).value - sre_exact(rotated, 2.0).value) > 1e-6);
}

TEST_CASE("nonlocal_bound: edge modes vanish, half-filling maximizes") {
    CHECK(nonlocal_bound(EntanglementSpectrum({1.0, 1.0}), 2.0).value == 0.0);
    CHECK(nonlocal_bound(EntanglementSpectrum({0.0}), 2.0).value == 0.0);

    const double nu_half = std::sqrt(0.5);  // nu^2 = 1/2
    CHECK(nonlocal_bound(EntanglementSpectrum({nu_half}), 2.0).value ==
          doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));

    // Per-mode alpha=2 contribution -log(1 - x + x^2) peaks at x = 1/2.
    double best = 0.0;
    double best_x = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        const double v = nonlocal_bound(EntanglementSpectrum({std::sqrt(x)}), 2.0).value;
        CHECK(v >= -1e-10);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    CHECK(best_x == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("nonlocal_bound additivity over concatenated spectra") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> left{rng.uniform(), rng.uniform()};
        std::vector<double> right{rng.uniform()};
        std::vector<double> both = left;
        both.insert(both.end(), right.begin(), right.end());
        const double sum = nonlocal_bound(EntanglementSpectrum(left), 2.0).value +
                           nonlocal_bound(EntanglementSpectrum(right), 2.0).value;
        const double joint = nonlocal_bound(EntanglementSpectrum(both), 2.0).value;
        CHECK(joint == doctest::Approx(sum).epsilon(1e-14));
    }
    // Single-mode parts add exactly.
    const double a = nonlocal_bound(EntanglementSpectrum({0.3}), 2.0).value;
    const double b = nonlocal_bound(EntanglementSpectrum({0.8}), 2.0).value;
    CHECK(nonlocal_bound(EntanglementSpectrum({0.3, 0.8}), 2.0).value == a + b);
}

TEST_CASE("canonical template state saturates the bound") {
    Rng rng(55);
    for (double alpha : {2.0, 3.0, 4.0}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Bipartition p(2, 2);
            const EntanglementSpectrum spec = random_spectrum(rng, 2);
            const CovarianceMatrix gamma = canonical_covariance(spec, p);
            CHECK(gamma.purity_deviation() < 1e-12);
            CHECK(sre_exact(gamma, alpha).value ==
                  doctest::Approx(nonlocal_bound(spec, alpha).value).epsilon(1e-10));
        }
    }
}

TEST_CASE("canonical_form: vacuum and template inputs come back unchanged") {
    const CanonicalDecomposition vac = canonical_form(vacuum(4), Bipartition(2, 2));
    CHECK(vac.template_residual < 1e-10);
    CHECK((vac.gamma_can.mat() - vacuum(4).mat()).cwiseAbs().maxCoeff() < 1e-10);

    Rng rng(61);
    const Bipartition p(2, 3);
    const EntanglementSpectrum spec = random_spectrum(rng, 2);
    const CovarianceMatrix canonical = canonical_covariance(spec, p);
    const CanonicalDecomposition again = canonical_form(canonical, p);
    CHECK(again.template_residual < 1e-9);
    CHECK((again.gamma_can.mat() - canonical.mat()).cwiseAbs().maxCoeff() < 1e-9);
    for (int k = 0; k < spec.size(); ++k) {
        CHECK(again.spectrum.nu(k) == doctest::Approx(spec.nu(k)).epsilon(1e-10));
    }
}

TEST_CASE("canonical_form on Haar states: residuals, spectrum, reconstruction") {
    Rng rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        const int sites = 4;
        const Bipartition p(trial % 2 == 0 ? 2 : 1, trial % 2 == 0 ? 2 : 3);
        const CovarianceMatrix gamma = random_pure_state(rng, sites);
        const CanonicalDecomposition canon = canonical_form(gamma, p);

        CHECK(canon.template_residual < 1e-9);

        Eigen::MatrixXd local = Eigen::MatrixXd::Zero(8, 8);
        local.topLeftCorner(2 * p.m(), 2 * p.m()) = canon.o_a.mat();
        local.bottomRightCorner(2 * p.n(), 2 * p.n()) = canon.o_b.mat();
        const Eigen::MatrixXd rebuilt = local * gamma.mat() * local.transpose();
        CHECK((rebuilt - canon.gamma_can.mat()).cwiseAbs().maxCoeff() < 1e-9);

        const EntanglementSpectrum direct = entanglement_spectrum(gamma, p);
        for (int k = 0; k < direct.size(); ++k) {
            CHECK(canon.spectrum.nu(k) == doctest::Approx(direct.nu(k)).epsilon(1e-9));
        }

        // Parity across the cut is conserved: the two reflections pair up.
        CHECK(canon.o_a.det_sign() * canon.o_b.det_sign() == 1);
    }
}

TEST_CASE("canonical_form input guards") {
    Rng rng(3);
    CHECK_THROWS_AS(canonical_form(random_pure_state(rng, 4), Bipartition(3, 1)), InputError);
    const SkewMatrix mixed(0.5 * vacuum(4).mat());
    CHECK_THROWS_AS(canonical_form(CovarianceMatrix(mixed), Bipartition(2, 2)), ContractError);
}

TEST_CASE("saturation of sre_exact on canonical_form output") {
    Rng rng(202);
    for (int trial = 0; trial < 5; ++trial) {
        const CovarianceMatrix gamma = random_pure_state(rng, 4);
        const Bipartition p(2, 2);
        const CanonicalDecomposition canon = canonical_form(gamma, p);
        for (double alpha : {2.0, 3.0}) {
            CHECK(sre_exact(canon.gamma_can, alpha).value ==
                  doctest::Approx(nonlocal_bound(canon.spectrum, alpha).value).epsilon(1e-10));
        }
    }
}

TEST_CASE("bound property along the local Gaussian orbit") {
    Rng rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        const int sites = trial % 2 == 0 ? 3 : 4;
        const Bipartition p(1, sites - 1);
        const CovarianceMatrix gamma = random_pure_state(rng, sites);
        const double bound = nonlocal_bound(entanglement_spectrum(gamma, p), 2.0).value;

        Eigen::MatrixXd local = Eigen::MatrixXd::Zero(2 * sites, 2 * sites);
        local.topLeftCorner(2, 2) = haar_special_orthogonal(rng, 2).mat();
        local.bottomRightCorner(2 * sites - 2, 2 * sites - 2) =
            haar_special_orthogonal(rng, 2 * sites - 2).mat();
        const CovarianceMatrix moved = apply_orthogonal(gamma, SpecialOrthogonal(local));
        CHECK(sre_exact(moved, 2.0).value >= bound - 1e-8);
    }
}

TEST_CASE("f_alpha_canonical: closed values and consistency identity") {
    const Bipartition p22(2, 2);
    CHECK(f_alpha_canonical(EntanglementSpectrum({1.0, 1.0}), p22, 2) ==
          doctest::Approx(16.0).epsilon(1e-14));

    // One mode with nu^2 = 1/2 at L = 2: F_2 = 4 * 3/4 = 3.
    const Bipartition p11(1, 1);
    const EntanglementSpectrum half({std::sqrt(0.5)});
    CHECK(f_alpha_canonical(half, p11, 2) == doctest::Approx(3.0).epsilon(1e-12));

    Rng rng(99);
    for (int alpha : {2, 3}) {
        const Bipartition p(2, 2);
        const EntanglementSpectrum spec = random_spectrum(rng, 2);
        const double f = f_alpha_canonical(spec, p, alpha);
        const double m_from_f = (std::log(f) - 4 * std::log(2.0)) / (1.0 - alpha);
        CHECK(m_from_f ==
              doctest::Approx(nonlocal_bound(spec, alpha).value).epsilon(1e-12));
    }
}

TEST_CASE("f_alpha_canonical matches brute-force minor enumeration at L=4") {
    Rng rng(123);
    for (int alpha : {2, 3}) {
        const Bipartition p(2, 2);
        const EntanglementSpectrum spec = random_spectrum(rng, 2);
        const CovarianceMatrix gamma = canonical_covariance(spec, p);
        const double brute = f_alpha_by_minors(gamma, alpha);
        CHECK(f_alpha_canonical(spec, p, alpha) == doctest::Approx(brute).epsilon(1e-10));
        CHECK(f_alpha_enumerate(gamma, alpha) == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("principal minors of covariance matrices are squared Pfaffians") {
    Rng rng(17);
    const CovarianceMatrix gamma = random_pure_state(rng, 3);
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<int> support;
        for (int i = 0; i < 6; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        if (support.size() % 2 != 0) continue;
        CHECK(principal_minor_det(gamma.gamma(), support) >= -1e-10);
    }
}

TEST_CASE("interblock Hessian: negative definite at the canonical point") {
    const double nu = std::cos(std::numbers::pi / 8);
    const InterblockHessian h = interblock_hessian(nu, nu, 2);
    for (double eig : h.eigenvalues) {
        CHECK(eig < 0.0);
    }
    CHECK(h.sign_consistent);
    for (double g : h.gradient) {
        CHECK(std::abs(g) < 1e-3 * 1e-3 * 100);  // stationary within O(step^2)
    }
}

TEST_CASE("interblock Hessian: random sweep stays negative") {
    Rng rng(911);
    for (int trial = 0; trial < 20; ++trial) {
        const double nu_a = 0.05 + 0.9 * rng.uniform();
        const double nu_b = 0.05 + 0.9 * rng.uniform();
        const InterblockHessian h = interblock_hessian(nu_a, nu_b, 2);
        for (double eig : h.eigenvalues) {
            CHECK(eig < -1e-8);
        }
    }
    CHECK_THROWS_AS(interblock_hessian(0.0, 1.0, 2), InputError);
    CHECK_THROWS_AS(interblock_hessian(0.5, 0.5, 2, 1.0), InputError);
}

TEST_CASE("entrywise power sums never exceed singular-value power sums") {
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 3);
    diag(0, 0) = 0.7;
    diag(1, 1) = -1.3;
    const SchattenGap equal_case = lp_schatten_gap(diag, 2);
    CHECK(equal_case.lhs == doctest::Approx(equal_case.rhs).epsilon(1e-12));

    const SchattenGap ones = lp_schatten_gap(Eigen::MatrixXd::Ones(2, 2), 2);
    CHECK(ones.lhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(ones.rhs == doctest::Approx(16.0).epsilon(1e-12));

    Rng rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::MatrixXd a(3, 5);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 5; ++j) a(i, j) = rng.normal();
        }
        for (int alpha : {2, 3}) {
            const SchattenGap gap = lp_schatten_gap(a, alpha);
            CHECK(gap.lhs <= gap.rhs + 1e-12);
        }
    }
}

TEST_SUITE_END();
