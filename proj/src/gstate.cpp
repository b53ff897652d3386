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

#include "gmagic/gstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmagic/errors.hpp"

namespace gmagic {

CovarianceMatrix::CovarianceMatrix(SkewMatrix gamma) : gamma_(std::move(gamma)) {}

double CovarianceMatrix::purity_deviation() const {
    const Eigen::MatrixXd sq = gamma_.mat() * gamma_.mat();
    return (sq + Eigen::MatrixXd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

void CovarianceMatrix::require_pure(double tol) const {
    const double dev = purity_deviation();
    if (dev > tol) {
        throw ContractError("covariance matrix is not pure: max |Gamma^2 + I| = " +
                            std::to_string(dev));
    }
}

Bipartition::Bipartition(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) {
        throw InputError("Bipartition: both sides need at least one site");
    }
}

Bipartition Bipartition::normalized(bool *swapped) const {
    const bool swap = m_ > n_;
    if (swapped != nullptr) {
        *swapped = swap;
    }
    return swap ? Bipartition(n_, m_) : *this;
}

EntanglementSpectrum::EntanglementSpectrum(std::vector<double> nus) : nus_(std::move(nus)) {
    for (double &nu : nus_) {
        if (nu < -kClampTol || nu > 1.0 + kClampTol) {
            throw ContractError("EntanglementSpectrum: value " + std::to_string(nu) +
                                " outside [0,1] beyond tolerance");
        }
        nu = std::clamp(nu, 0.0, 1.0);
    }
    std::sort(nus_.begin(), nus_.end(), std::greater<>());
}

double EntanglementSpectrum::mu(int k) const {
    const double nu = nus_[static_cast<std::size_t>(k)];
    return std::sqrt(std::max(0.0, 1.0 - nu * nu));
}

CovarianceMatrix vacuum(int sites) {
    if (sites < 1) {
        throw InputError("vacuum: need at least one site");
    }
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * sites, 2 * sites);
    for (int j = 0; j < sites; ++j) {
        g(2 * j, 2 * j + 1) = 1.0;
        g(2 * j + 1, 2 * j) = -1.0;
    }
    return CovarianceMatrix(SkewMatrix(g));
}

CovarianceMatrix apply_orthogonal(const CovarianceMatrix &gamma, const SpecialOrthogonal &o) {
    if (o.dim() != gamma.dim()) {
        throw InputError("apply_orthogonal: dimension mismatch");
    }
    return CovarianceMatrix(
        SkewMatrix::antisymmetric_part(o.mat() * gamma.mat() * o.mat().transpose()));
}

EntanglementSpectrum entanglement_spectrum(const CovarianceMatrix &gamma, const Bipartition &p) {
    if (p.sites() != gamma.sites()) {
        throw InputError("entanglement_spectrum: bipartition does not match state size");
    }
    gamma.require_pure();

    // Work with the smaller side; the other block carries the same nontrivial
    // values plus |n - m| trivial local modes.
    const int r = p.min_side();
    const Eigen::MatrixXd block =
        p.m() <= p.n() ? gamma.mat().topLeftCorner(2 * r, 2 * r).eval()
                       : gamma.mat().bottomRightCorner(2 * r, 2 * r).eval();

    // The Schur route returns each singular-value pair of the skew block
    // once, exactly paired even across the heavy degeneracies circuit states
    // produce (a generic SVD splits those pairs by its own roundoff).
    std::vector<double> nus = antisymmetric_pair_values(SkewMatrix::antisymmetric_part(block));
    return EntanglementSpectrum(std::move(nus));
}

namespace {

/// Binary Renyi entropy of a probability p in nats.
double binary_entropy(double p, double order) {
    p = std::clamp(p, 0.0, 1.0);
    const double q = 1.0 - p;
    if (p == 0.0 || q == 0.0) {
        return 0.0;
    }
    if (order == 1.0) {
        return -p * std::log(p) - q * std::log(q);
    }
    if (order == 0.0) {
        return std::log(2.0);
    }
    if (std::isinf(order)) {
        return -std::log(std::max(p, q));
    }
    return std::log(std::pow(p, order) + std::pow(q, order)) / (1.0 - order);
}

}  // namespace

double entanglement_entropy(const EntanglementSpectrum &spec, double order) {
    if (order < 0.0) {
        throw InputError("entanglement_entropy: order must be >= 0");
    }
    double total = 0.0;
    for (double nu : spec.nus()) {
        total += binary_entropy(0.5 * (1.0 + nu), order);
    }
    return total;
}

}  // namespace gmagic
