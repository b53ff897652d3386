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

#include "gmagic/models.hpp"

#include <cmath>
#include <string>

#include "gmagic/errors.hpp"

namespace gmagic {

namespace {

// Adds w * (i/2) gamma_a gamma_b to the Hamiltonian matrix, i.e. h_ab += w.
void add_pair(Eigen::MatrixXd &h, int a, int b, double w) {
    h(a, b) += w;
    h(b, a) -= w;
}

// Majorana rows for the bond (j, j+1 mod L): hopping amplitude tau in
// -tau (c^+_j c_{j+1} + h.c.) and pairing amplitude delta in
// delta (c_j c_{j+1} + h.c.).
void add_bond(Eigen::MatrixXd &h, int sites, int j, double tau, double delta) {
    const int jp = (j + 1) % sites;
    add_pair(h, 2 * j, 2 * jp + 1, -tau + delta);
    add_pair(h, 2 * j + 1, 2 * jp, tau + delta);
}

}  // namespace

double gaussian_energy(const QuadraticHamiltonian &ham, const CovarianceMatrix &gamma) {
    if (ham.h.dim() != gamma.dim()) {
        throw InputError("gaussian_energy: dimension mismatch");
    }
    return 0.25 * (ham.h.mat() * gamma.mat()).trace();
}

QuadraticHamiltonian kitaev(int sites, double t, double delta, double mu, BoundaryCondition bc) {
    if (sites < 2) {
        throw InputError("kitaev: need at least two sites");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * sites, 2 * sites);
    const int bonds = bc == BoundaryCondition::kPeriodic ? sites : sites - 1;
    for (int j = 0; j < bonds; ++j) {
        add_bond(h, sites, j, t, delta);
    }
    for (int j = 0; j < sites; ++j) {
        add_pair(h, 2 * j, 2 * j + 1, -mu);
    }
    return QuadraticHamiltonian{sites, SkewMatrix(h), bc};
}

QuadraticHamiltonian xy(int sites, double gamma_an, BoundaryCondition bc) {
    if (sites < 2) {
        throw InputError("xy: need at least two sites");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * sites, 2 * sites);
    const int bonds = bc == BoundaryCondition::kPeriodic ? sites : sites - 1;
    for (int j = 0; j < bonds; ++j) {
        // + c^+_j c_{j+1} + gamma c^+_j c^+_{j+1} + h.c.
        add_bond(h, sites, j, -1.0, -gamma_an);
    }
    return QuadraticHamiltonian{sites, SkewMatrix(h), bc};
}

CovarianceMatrix ground_state(const QuadraticHamiltonian &ham) {
    const CanonicalPairs canon = antisymmetric_canonical(ham.h);
    const double eps_min = canon.pairs.empty() ? 0.0 : canon.pairs.back();
    if (eps_min <= 1e-10) {
        throw DegeneracyError("ground_state: zero mode (eps_min = " + std::to_string(eps_min) +
                                  "); the ground state is degenerate",
                              eps_min);
    }
    const int d = ham.h.dim();
    Eigen::MatrixXd j_blocks = Eigen::MatrixXd::Zero(d, d);
    for (int k = 0; k < d / 2; ++k) {
        j_blocks(2 * k, 2 * k + 1) = 1.0;
        j_blocks(2 * k + 1, 2 * k) = -1.0;
    }
    const Eigen::MatrixXd &o = canon.rotation.mat();
    CovarianceMatrix gs(SkewMatrix::antisymmetric_part(o * j_blocks * o.transpose()));

    // With eps_k >= 0 the all-plus block signs minimize (1/4) Tr(h Gamma);
    // cross-check against the closed form -(1/2) sum eps_k.
    double level_sum = 0.0;
    for (double eps : canon.pairs) level_sum += eps;
    const double energy = gaussian_energy(ham, gs);
    if (std::abs(energy + 0.5 * level_sum) > 1e-8 * (1.0 + std::abs(energy))) {
        throw ContractError("ground_state: energy " + std::to_string(energy) +
                            " deviates from -(1/2) sum eps = " + std::to_string(-0.5 * level_sum));
    }
    return gs;
}

CovarianceMatrix neel(int sites) {
    if (sites < 2 || sites % 2 != 0) {
        throw InputError("neel: need an even number of sites");
    }
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * sites, 2 * sites);
    for (int j = 0; j < sites; ++j) {
        const double sign = j % 2 == 0 ? -1.0 : 1.0;  // even sites occupied
        g(2 * j, 2 * j + 1) = sign;
        g(2 * j + 1, 2 * j) = -sign;
    }
    return CovarianceMatrix(SkewMatrix(g));
}

Propagator::Propagator(const QuadraticHamiltonian &ham) : dim_(ham.h.dim()) {
    CanonicalPairs canon = antisymmetric_canonical(ham.h);
    basis_ = canon.rotation.mat();
    levels_ = std::move(canon.pairs);
}

SpecialOrthogonal Propagator::rotation(double t) const {
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        const double angle = levels_[k] * t;
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const int i = static_cast<int>(2 * k);
        rot(i, i) = c;
        rot(i, i + 1) = s;
        rot(i + 1, i) = -s;
        rot(i + 1, i + 1) = c;
    }
    return SpecialOrthogonal(basis_ * rot * basis_.transpose());
}

CovarianceMatrix Propagator::apply(const CovarianceMatrix &gamma0, double t) const {
    if (gamma0.dim() != dim_) {
        throw InputError("Propagator: dimension mismatch");
    }
    return apply_orthogonal(gamma0, rotation(t));
}

CovarianceMatrix evolve(const CovarianceMatrix &gamma0, const QuadraticHamiltonian &ham,
                        double t) {
    return Propagator(ham).apply(gamma0, t);
}

CovarianceMatrix brickwall_step(const CovarianceMatrix &gamma, Rng &rng, LayerParity parity) {
    const int sites = gamma.sites();
    if (sites % 2 != 0) {
        throw InputError("brickwall_step: need an even number of sites");
    }
    Eigen::MatrixXd g = gamma.mat();
    const int first = parity == LayerParity::kEven ? 0 : 1;
    for (int site = first; site + 1 < sites; site += 2) {
        const Eigen::MatrixXd o = haar_special_orthogonal(rng, 4).mat();
        const int a = 2 * site;
        g.middleRows(a, 4) = o * g.middleRows(a, 4);
        g.middleCols(a, 4) = g.middleCols(a, 4) * o.transpose();
    }
    return CovarianceMatrix(SkewMatrix::antisymmetric_part(g));
}

}  // namespace gmagic
