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

#include "gmagic/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace gmagic::oracle {

namespace {

using Complex = std::complex<double>;

Matrix pauli(char which) {
    Matrix p(2, 2);
    switch (which) {
        case 'I':
            p << 1, 0, 0, 1;
            break;
        case 'X':
            p << 0, 1, 1, 0;
            break;
        case 'Y':
            p << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 'Z':
            p << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument("pauli: unknown label");
    }
    return p;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix pauli_string(int sites, const std::vector<char> &labels) {
    Matrix out = pauli(labels[0]);
    for (int j = 1; j < sites; ++j) {
        out = kron(out, pauli(labels[static_cast<std::size_t>(j)]));
    }
    return out;
}

}  // namespace

Matrix majorana(int sites, int mu) {
    const int site = mu / 2;
    std::vector<char> labels(static_cast<std::size_t>(sites), 'I');
    for (int j = 0; j < site; ++j) labels[static_cast<std::size_t>(j)] = 'Z';
    labels[static_cast<std::size_t>(site)] = mu % 2 == 0 ? 'X' : 'Y';
    return pauli_string(sites, labels);
}

Matrix quadratic_hamiltonian(int sites, const Eigen::MatrixXd &h) {
    const int d = 2 * sites;
    const Eigen::Index dim = Eigen::Index{1} << sites;
    Matrix out = Matrix::Zero(dim, dim);
    std::vector<Matrix> gammas;
    gammas.reserve(static_cast<std::size_t>(d));
    for (int mu = 0; mu < d; ++mu) gammas.push_back(majorana(sites, mu));
    for (int mu = 0; mu < d; ++mu) {
        for (int nu = 0; nu < d; ++nu) {
            if (h(mu, nu) != 0.0) {
                out += Complex(0, 0.25) * h(mu, nu) *
                       (gammas[static_cast<std::size_t>(mu)] * gammas[static_cast<std::size_t>(nu)]);
            }
        }
    }
    return out;
}

Vector ground_vector(const Matrix &hamiltonian, double gap_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
    const Eigen::VectorXd evals = es.eigenvalues();
    if (evals.size() > 1 && evals(1) - evals(0) < gap_tol) {
        throw std::runtime_error("ground_vector: degenerate ground level (gap " +
                                 std::to_string(evals(1) - evals(0)) + ")");
    }
    return es.eigenvectors().col(0);
}

std::vector<double> spectrum(const Matrix &hamiltonian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(es.eigenvalues().size()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    }
    return out;
}

Eigen::MatrixXd covariance_of(const Vector &psi) {
    const int sites = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
    const int d = 2 * sites;
    std::vector<Matrix> gammas;
    gammas.reserve(static_cast<std::size_t>(d));
    for (int mu = 0; mu < d; ++mu) gammas.push_back(majorana(sites, mu));
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
    for (int mu = 0; mu < d; ++mu) {
        for (int nu = mu + 1; nu < d; ++nu) {
            const Complex val =
                psi.dot(gammas[static_cast<std::size_t>(mu)] *
                        (gammas[static_cast<std::size_t>(nu)] * psi));
            const Complex entry = Complex(0, -1) * val;  // -(i/2) <[g_u, g_v]> = -i <g_u g_v>
            out(mu, nu) = entry.real();
            out(nu, mu) = -entry.real();
        }
    }
    return out;
}

Vector state_of_covariance(const Eigen::MatrixXd &gamma) {
    const int sites = static_cast<int>(gamma.rows()) / 2;
    // A pure Gamma is the unique energy minimizer of the quadratic
    // Hamiltonian with h = Gamma, so its state vector is that ground vector.
    return ground_vector(quadratic_hamiltonian(sites, gamma));
}

double sre_from_state(const Vector &psi, double alpha) {
    const int sites = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
    const double dim = std::pow(2.0, sites);
    long n_strings = 1;
    for (int j = 0; j < sites; ++j) n_strings *= 4;

    const char labels[4] = {'I', 'X', 'Y', 'Z'};
    double sum = 0.0;
    for (long code = 0; code < n_strings; ++code) {
        std::vector<char> string_labels(static_cast<std::size_t>(sites));
        long c = code;
        for (int j = 0; j < sites; ++j) {
            string_labels[static_cast<std::size_t>(j)] = labels[c % 4];
            c /= 4;
        }
        const Matrix p = pauli_string(sites, string_labels);
        const Complex expectation = psi.dot(p * psi);
        const double pi_p = std::norm(expectation) / dim;
        sum += std::pow(pi_p, alpha);
    }
    return std::log(sum) / (1.0 - alpha) - std::log(dim);
}

Vector schroedinger_evolve(const Matrix &hamiltonian, const Vector &psi, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
    const Matrix &v = es.eigenvectors();
    Vector phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
    }
    return v * phases.asDiagonal() * (v.adjoint() * psi);
}

double entanglement_entropy_of_state(const Vector &psi, int m, double order) {
    const int sites = static_cast<int>(std::lround(std::log2(static_cast<double>(psi.size()))));
    const Eigen::Index da = Eigen::Index{1} << m;
    const Eigen::Index db = Eigen::Index{1} << (sites - m);
    Matrix rho_a = Matrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index b = 0; b < db; ++b) {
                acc += psi(i * db + b) * std::conj(psi(j * db + b));
            }
            rho_a(i, j) = acc;  // rho_A = Tr_B |psi><psi|
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_a, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    double renyi_sum = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double p = std::max(0.0, es.eigenvalues()(k));
        if (p <= 0.0) continue;
        entropy -= p * std::log(p);
        renyi_sum += std::pow(p, order);
    }
    if (order == 1.0) return entropy;
    return std::log(renyi_sum) / (1.0 - order);
}

Vector two_site_pair_state(double phi) {
    Vector psi = Vector::Zero(4);
    psi(0) = std::cos(phi);
    psi(3) = Complex(0, 1) * std::sin(phi);
    return psi;
}

}  // namespace gmagic::oracle
