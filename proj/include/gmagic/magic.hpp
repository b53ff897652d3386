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

#ifndef GMAGIC_MAGIC_HPP_
#define GMAGIC_MAGIC_HPP_

#include <array>

#include "gmagic/gstate.hpp"
#include "gmagic/skewlin.hpp"

namespace gmagic {

/// Default cap on exact-SRE system size; the subset sum costs Theta(4^L).
inline constexpr int kSreSiteCap = 8;

/// A stabilizer Renyi entropy value in nats.
struct SreValue {
    double alpha;
    double value;
};

/// Local rotations bringing a pure state to its bipartite canonical form:
/// gamma_can = (o_a ⊕ o_b) Gamma (o_a ⊕ o_b)^T, block diagonal over
/// elementary A-B pairs (nu_k, mu_k) plus n-m trivial local modes.
///
/// o_a and o_b are orthogonal; states whose mode parity is twisted across the
/// cut need reflections (realized by parity-odd local unitaries), so their
/// determinants may be -1.
struct CanonicalDecomposition {
    Orthogonal o_a;
    Orthogonal o_b;
    EntanglementSpectrum spectrum;
    CovarianceMatrix gamma_can;
    /// Max deviation of gamma_can from the exact block template.
    double template_residual;
};

/// Exact SRE of a pure Gaussian state by principal-minor enumeration:
/// M_alpha = 1/(1-alpha) log sum_x (det Gamma|_x / 2^L)^alpha - L log 2,
/// summed over even-size index subsets.
SreValue sre_exact(const CovarianceMatrix &gamma, double alpha, int site_cap = kSreSiteCap);

/// Canonical form of a pure state for a bipartition with m <= n.
CanonicalDecomposition canonical_form(const CovarianceMatrix &gamma, const Bipartition &p);

/// Covariance matrix assembled directly from the canonical block template.
CovarianceMatrix canonical_covariance(const EntanglementSpectrum &spec, const Bipartition &p);

/// Closed-form nonlocal-magic bound:
/// 1/(1-alpha) sum_k log((1 + nu_k^{2a} + mu_k^{2a})/2).
SreValue nonlocal_bound(const EntanglementSpectrum &spec, double alpha);

/// F_alpha evaluated on the canonical form (integer alpha >= 2):
/// 2^max(m,n) * prod_k (1 + nu_k^{2a} + mu_k^{2a}).
double f_alpha_canonical(const EntanglementSpectrum &spec, const Bipartition &p, int alpha);

/// Sum of det(Gamma|_x)^alpha over all even-size subsets; the brute-force
/// route to F_alpha used by the appendix checks.
double f_alpha_enumerate(const CovarianceMatrix &gamma, int alpha);

struct InterblockHessian {
    std::array<double, 8> eigenvalues;       // central differences at `step`
    std::array<double, 8> eigenvalues_half;  // Richardson check at step/2
    std::array<double, 8> gradient;          // first differences at `step`
    bool sign_consistent;                    // eigenvalue signs agree between steps
};

/// Hessian of F_alpha along the eight inter-block mixing directions of a
/// two-block canonical state (L=4, m=n=2), by central finite differences.
InterblockHessian interblock_hessian(double nu_a, double nu_b, int alpha, double step = 1e-3);

struct SchattenGap {
    double lhs;  // entrywise: sum |A_ij|^{2 alpha}
    double rhs;  // spectral: sum sigma_k^{2 alpha}
};

/// Both sides of the entrywise-vs-singular-value power inequality.
SchattenGap lp_schatten_gap(const Eigen::MatrixXd &a, int alpha);

}  // namespace gmagic

#endif  // GMAGIC_MAGIC_HPP_
