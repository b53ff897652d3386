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

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "gmagic/errors.hpp"
#include "gmagic/magic.hpp"
#include "gmagic/models.hpp"
#include "gmagic/oracle.hpp"
#include "reference_helpers.hpp"

using namespace gmagic;

namespace {

double occupation(const CovarianceMatrix &gamma, int site) {
    return 0.5 * (1.0 - gamma.mat()(2 * site, 2 * site + 1));
}

}  // namespace

TEST_SUITE_BEGIN("models");

TEST_CASE("decoupled kitaev chain: block structure and product ground state") {
    const QuadraticHamiltonian ham = kitaev(4, 0.0, 0.0, 1.5, BoundaryCondition::kOpen);
    // Only on-site terms: h is block diagonal over sites.
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i / 2 != j / 2) CHECK(ham.h.mat()(i, j) == 0.0);
        }
    }
    const CovarianceMatrix gs = ground_state(ham);
    CHECK(gs.purity_deviation() < 1e-12);
    for (int site = 0; site < 4; ++site) {
        CHECK(occupation(gs, site) == doctest::Approx(1.0).epsilon(1e-12));  // mu > 0 fills
    }
    const EntanglementSpectrum spec = entanglement_spectrum(gs, Bipartition(2, 2));
    CHECK(nonlocal_bound(spec, 2.0).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("kitaev many-body spectrum matches single-particle levels (L=3)") {
    const QuadraticHamiltonian ham = kitaev(3, 1.0, 0.7, 0.9, BoundaryCondition::kOpen);
    const CanonicalPairs canon = antisymmetric_canonical(ham.h);

    const oracle::Matrix dense = oracle::quadratic_hamiltonian(3, ham.h.mat());
    const std::vector<double> many_body = oracle::spectrum(dense);

    std::vector<double> expected;
    for (unsigned occ = 0; occ < 8; ++occ) {
        double e = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double sign = (occ >> k) & 1 ? 1.0 : -1.0;
            e += 0.5 * sign * canon.pairs[static_cast<std::size_t>(k)];
        }
        expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(many_body.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(many_body[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("ground state matches dense Fock-space diagonalization (L=3)") {
    const QuadraticHamiltonian ham = kitaev(3, 0.7, 0.3, 1.1, BoundaryCondition::kOpen);
    const CovarianceMatrix gs = ground_state(ham);
    CHECK(gs.purity_deviation() < 1e-10);

    const oracle::Matrix dense = oracle::quadratic_hamiltonian(3, ham.h.mat());
    const oracle::Vector psi = oracle::ground_vector(dense);
    const std::vector<double> levels = oracle::spectrum(dense);

    CHECK(gaussian_energy(ham, gs) == doctest::Approx(levels.front()).epsilon(1e-9));
    // The covariance matrices agree entrywise, pinning every sign convention.
    CHECK((oracle::covariance_of(psi) - gs.mat()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("ground_state refuses zero modes") {
    // The open Majorana chain at t = Delta, mu = 0 leaves two unpaired end
    // modes, i.e. an exact zero level.
    const QuadraticHamiltonian ham = kitaev(6, 1.0, 1.0, 0.0, BoundaryCondition::kOpen);
    CHECK_THROWS_AS(ground_state(ham), DegeneracyError);
    try {
        ground_state(ham);
    } catch (const DegeneracyError &e) {
        CHECK(e.eps_min() < 1e-10);
    }
}

TEST_CASE("stabilizer limits of the kitaev chain carry no nonlocal magic") {
    // mu = 0 at t = Delta (periodic, gapped): paired Majoranas across bonds.
    const CovarianceMatrix gs0 =
        ground_state(kitaev(8, 1.0, 1.0, 0.0, BoundaryCondition::kPeriodic));
    const double bound0 =
        nonlocal_bound(entanglement_spectrum(gs0, Bipartition(4, 4)), 2.0).value;
    CHECK(bound0 <= 1e-8);

    // Deep trivial phase: near-product state.
    const CovarianceMatrix gs_big =
        ground_state(kitaev(8, 1.0, 1.0, 1e6, BoundaryCondition::kPeriodic));
    const double bound_big =
        nonlocal_bound(entanglement_spectrum(gs_big, Bipartition(4, 4)), 2.0).value;
    CHECK(bound_big <= 1e-10);
    for (int site = 0; site < 8; ++site) {
        CHECK(occupation(gs_big, site) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("xy chain: u(1) limit, kitaev correspondence, open ends") {
    // gamma_an = 1 coincides with the t = Delta = -1, mu = 0 Kitaev chain.
    const QuadraticHamiltonian x1 = xy(5, 1.0, BoundaryCondition::kOpen);
    const QuadraticHamiltonian k1 = kitaev(5, -1.0, -1.0, 0.0, BoundaryCondition::kOpen);
    CHECK((x1.h.mat() - k1.h.mat()).cwiseAbs().maxCoeff() == 0.0);

    // Open boundaries: no wraparound couplings.
    const QuadraticHamiltonian open_xy = xy(4, 0.3, BoundaryCondition::kOpen);
    CHECK(open_xy.h.mat().topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
    const QuadraticHamiltonian per_xy = xy(4, 0.3, BoundaryCondition::kPeriodic);
    CHECK(per_xy.h.mat().topRightCorner(2, 2).cwiseAbs().maxCoeff() > 0.0);

    // gamma_an = 0 conserves total particle number along the quench.
    const QuadraticHamiltonian xx = xy(6, 0.0, BoundaryCondition::kOpen);
    const CovarianceMatrix start = neel(6);
    double n0 = 0.0;
    for (int site = 0; site < 6; ++site) n0 += occupation(start, site);
    for (double t : {0.7, 1.9}) {
        const CovarianceMatrix evolved = evolve(start, xx, t);
        double nt = 0.0;
        for (int site = 0; site < 6; ++site) nt += occupation(evolved, site);
        CHECK(nt == doctest::Approx(n0).epsilon(1e-9));
    }
}

TEST_CASE("neel state: alternating occupations, purity, zero magic") {
    const CovarianceMatrix state = neel(4);
    CHECK(state.purity_deviation() < 1e-15);
    for (int site = 0; site < 4; ++site) {
        CHECK(occupation(state, site) == doctest::Approx(site % 2 == 0 ? 1.0 : 0.0).epsilon(1e-12));
    }
    CHECK(sre_exact(neel(2), 2.0).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(neel(3), InputError);
}

TEST_CASE("evolve: identity at t=0, dense Schroedinger oracle, composition") {
    Rng rng(8);
    const QuadraticHamiltonian ham = kitaev(3, 0.8, 0.45, 0.6, BoundaryCondition::kOpen);
    const CovarianceMatrix gamma0 = gmagic_tests::random_pure_state(rng, 3);

    CHECK((evolve(gamma0, ham, 0.0).mat() - gamma0.mat()).cwiseAbs().maxCoeff() < 1e-14);

    const double t = 0.7;
    const CovarianceMatrix evolved = evolve(gamma0, ham, t);
    const oracle::Matrix dense = oracle::quadratic_hamiltonian(3, ham.h.mat());
    const oracle::Vector psi0 = oracle::state_of_covariance(gamma0.mat());
    const oracle::Vector psi_t = oracle::schroedinger_evolve(dense, psi0, t);
    CHECK((oracle::covariance_of(psi_t) - evolved.mat()).cwiseAbs().maxCoeff() < 1e-8);

    const CovarianceMatrix two_step = evolve(evolve(gamma0, ham, 0.3), ham, 0.4);
    CHECK((two_step.mat() - evolved.mat()).cwiseAbs().maxCoeff() < 1e-8);

    // Energy is conserved along the flow.
    CHECK(gaussian_energy(ham, evolved) ==
          doctest::Approx(gaussian_energy(ham, gamma0)).epsilon(1e-8));
}

TEST_CASE("propagator reuses the decomposition consistently") {
    const QuadraticHamiltonian ham = xy(6, 0.4, BoundaryCondition::kOpen);
    const Propagator prop(ham);
    const CovarianceMatrix start = neel(6);
    const CovarianceMatrix a = prop.apply(start, 1.3);
    const CovarianceMatrix b = evolve(start, ham, 1.3);
    CHECK((a.mat() - b.mat()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("brickwall layers: purity, locality of idle sites, determinism") {
    Rng rng(33);
    CovarianceMatrix gamma = vacuum(8);
    for (int layer = 0; layer < 100; ++layer) {
        const LayerParity parity = layer % 2 == 0 ? LayerParity::kEven : LayerParity::kOdd;
        gamma = brickwall_step(gamma, rng, parity);
    }
    CHECK(gamma.purity_deviation() < 1e-7);

    // An odd layer leaves the first and last sites untouched, including the
    // corner entries coupling them.
    Rng rng2(55);
    const CovarianceMatrix before = gamma;
    const CovarianceMatrix after = brickwall_step(before, rng2, LayerParity::kOdd);
    CHECK((after.mat().topLeftCorner(2, 2) - before.mat().topLeftCorner(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((after.mat().topRightCorner(2, 2) - before.mat().topRightCorner(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((after.mat().bottomRightCorner(2, 2) - before.mat().bottomRightCorner(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // Same seed, same layer sequence.
    Rng r1(4242);
    Rng r2(4242);
    const CovarianceMatrix c1 = brickwall_step(before, r1, LayerParity::kEven);
    const CovarianceMatrix c2 = brickwall_step(before, r2, LayerParity::kEven);
    CHECK((c1.mat() - c2.mat()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("brickwall circuits generate nonlocal magic from a product start") {
    Rng rng(77);
    CovarianceMatrix gamma = vacuum(20);
    for (int t = 0; t < 8; ++t) {
        gamma = brickwall_step(gamma, rng, LayerParity::kEven);
        gamma = brickwall_step(gamma, rng, LayerParity::kOdd);
    }
    const double bound =
        nonlocal_bound(entanglement_spectrum(gamma, Bipartition(10, 10)), 2.0).value;
    CHECK(bound > 0.05);
}

TEST_SUITE_END();
