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

#ifndef GMAGIC_ORACLE_HPP_
#define GMAGIC_ORACLE_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

// Dense Fock-space reference computations on Jordan-Wigner state vectors.
// Everything here works on 2^L-dimensional complex vectors and Pauli
// matrices; nothing is shared with the covariance-matrix code paths it
// cross-checks, apart from the Majorana ordering convention (site j owns
// gamma_{2j} ~ X-type and gamma_{2j+1} ~ Y-type).
namespace gmagic::oracle {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense 2^L x 2^L Majorana operator gamma_mu.
Matrix majorana(int sites, int mu);

/// Dense Hamiltonian (i/4) sum h_{uv} gamma_u gamma_v from the 2L x 2L
/// antisymmetric matrix h.
Matrix quadratic_hamiltonian(int sites, const Eigen::MatrixXd &h);

/// Ground eigenvector; throws when the spectral gap is below `gap_tol`.
Vector ground_vector(const Matrix &hamiltonian, double gap_tol = 1e-10);

/// Sorted eigenvalues of a dense Hermitian operator.
std::vector<double> spectrum(const Matrix &hamiltonian);

/// Covariance matrix -(i/2) <psi| [gamma_u, gamma_v] |psi>.
Eigen::MatrixXd covariance_of(const Vector &psi);

/// State vector with the given pure covariance matrix, found as the ground
/// vector of the dense Hamiltonian built from h = Gamma.
Vector state_of_covariance(const Eigen::MatrixXd &gamma);

/// Stabilizer Renyi entropy from the Pauli-string distribution
/// pi(P) = |<psi|P|psi>|^2 / 2^L, by enumeration of all 4^L strings.
double sre_from_state(const Vector &psi, double alpha);

/// exp(-i H t) |psi> by dense diagonalization.
Vector schroedinger_evolve(const Matrix &hamiltonian, const Vector &psi, double t);

/// Renyi entanglement entropy (nats) of the first m sites of |psi>.
double entanglement_entropy_of_state(const Vector &psi, int m, double order);

/// cos(phi)|00> + i sin(phi)|11>: the two-site state prepared by
/// exp(i phi X X) from the vacuum.
Vector two_site_pair_state(double phi);

}  // namespace gmagic::oracle

#endif  // GMAGIC_ORACLE_HPP_
