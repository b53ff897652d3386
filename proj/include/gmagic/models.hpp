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

#ifndef GMAGIC_MODELS_HPP_
#define GMAGIC_MODELS_HPP_

#include "gmagic/gstate.hpp"
#include "gmagic/rng.hpp"
#include "gmagic/skewlin.hpp"

namespace gmagic {

enum class BoundaryCondition { kOpen, kPeriodic };

/// Quadratic fermion Hamiltonian H = (i/4) sum_{uv} h_{uv} gamma_u gamma_v
/// with real antisymmetric single-particle matrix h.
struct QuadraticHamiltonian {
    int sites;
    SkewMatrix h;
    BoundaryCondition bc;
};

/// Energy of a Gaussian state under h: (1/4) Tr(h Gamma).
double gaussian_energy(const QuadraticHamiltonian &ham, const CovarianceMatrix &gamma);

/// Kitaev chain: sum_j [ -t c^+_j c_{j+1} + Delta c_j c_{j+1} + h.c.
///                        - mu (c^+_j c_j - 1/2) ].
QuadraticHamiltonian kitaev(int sites, double t, double delta, double mu, BoundaryCondition bc);

/// XY chain: sum_j [ c^+_j c_{j+1} + gamma_an c^+_j c^+_{j+1} + h.c. ].
QuadraticHamiltonian xy(int sites, double gamma_an, BoundaryCondition bc);

/// Gaussian state of lowest energy; refuses when the smallest single-particle
/// level is below 1e-10 (degenerate ground space).
CovarianceMatrix ground_state(const QuadraticHamiltonian &ham);

/// Alternating occupied/empty product state |1010...>.
CovarianceMatrix neel(int sites);

/// Gamma(t) = exp(h t) Gamma0 exp(h t)^T.
CovarianceMatrix evolve(const CovarianceMatrix &gamma0, const QuadraticHamiltonian &ham, double t);

/// Caches the canonical form of h so repeated time points cost two matrix
/// products each instead of a fresh decomposition.
class Propagator {
  public:
    explicit Propagator(const QuadraticHamiltonian &ham);

    SpecialOrthogonal rotation(double t) const;
    CovarianceMatrix apply(const CovarianceMatrix &gamma0, double t) const;

  private:
    int dim_;
    Eigen::MatrixXd basis_;
    std::vector<double> levels_;
};

enum class LayerParity { kEven, kOdd };

/// One brick-wall layer of independent Haar-SO(4) gates on disjoint adjacent
/// site pairs: (0,1),(2,3),... for even parity, (1,2),(3,4),... for odd
/// (open ends idle). One time unit = one even plus one odd layer.
CovarianceMatrix brickwall_step(const CovarianceMatrix &gamma, Rng &rng, LayerParity parity);

}  // namespace gmagic

#endif  // GMAGIC_MODELS_HPP_
