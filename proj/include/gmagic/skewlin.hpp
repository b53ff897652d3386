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

#ifndef GMAGIC_SKEWLIN_HPP_
#define GMAGIC_SKEWLIN_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gmagic/rng.hpp"

namespace gmagic {

inline constexpr double kAntisymmetryTol = 1e-12;
inline constexpr double kOrthogonalityTol = 1e-10;
inline constexpr double kDetTol = 1e-8;
inline constexpr double kReconstructionTol = 1e-10;

/// Real skew-symmetric matrix of even dimension (2L Majorana modes).
/// Entries are explicitly antisymmetrized ((M - M^T)/2) on construction.
class SkewMatrix {
  public:
    /// Validates near-antisymmetry of the input (tolerance 1e-12 relative to
    /// the largest entry) before storing the exact antisymmetric part.
    explicit SkewMatrix(const Eigen::MatrixXd &m);

    /// Stores (m - m^T)/2 without the antisymmetry check; for raw inputs such
    /// as Gaussian proposal matrices.
    static SkewMatrix antisymmetric_part(const Eigen::MatrixXd &m);

    static SkewMatrix zero(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXd &mat() const { return mat_; }

  private:
    struct Unchecked {};
    SkewMatrix(Eigen::MatrixXd m, Unchecked) : mat_(std::move(m)) {}

    Eigen::MatrixXd mat_;
};

/// Real orthogonal matrix with its determinant sign (+1 or -1) recorded.
/// Canonical decompositions of skew matrices with negative Pfaffian force a
/// reflection, so this type is what they return.
class Orthogonal {
  public:
    explicit Orthogonal(const Eigen::MatrixXd &o);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXd &mat() const { return mat_; }
    int det_sign() const { return det_sign_; }

  private:
    Eigen::MatrixXd mat_;
    int det_sign_;
};

/// Element of SO(dim): orthogonal with determinant +1.
class SpecialOrthogonal {
  public:
    /// Checks O O^T = I within 1e-10 and det O = +1 within 1e-8.
    explicit SpecialOrthogonal(const Eigen::MatrixXd &o);

    static SpecialOrthogonal identity(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXd &mat() const { return mat_; }

  private:
    Eigen::MatrixXd mat_;
};

/// Decomposition M = O (⊕_k eps_k J) O^T with J = [[0,1],[-1,0]] and
/// eps_k >= 0 sorted descending. det(O) = +1 except when Pf(M) < 0 and M has
/// no (near-)zero pair, in which case a reflection is unavoidable.
struct CanonicalPairs {
    Orthogonal rotation;
    std::vector<double> pairs;  // one per 2x2 block, eps_k >= 0, descending
};

/// Determinant of the principal submatrix of M selected by `support`.
/// Empty support gives 1, odd-size support gives 0 (odd skew minors vanish).
double principal_minor_det(const SkewMatrix &m, std::span<const int> support);

/// Real canonical form of a skew-symmetric matrix via the real Schur
/// decomposition, post-processed into 2x2 blocks.
CanonicalPairs antisymmetric_canonical(const SkewMatrix &m);

/// Just the pair values eps_k >= 0 (descending), skipping the basis. Exactly
/// paired by construction, unlike a generic SVD of the same matrix.
std::vector<double> antisymmetric_pair_values(const SkewMatrix &m);

/// exp(s K) for antisymmetric K; always a proper rotation.
SpecialOrthogonal expm_antisymmetric(const SkewMatrix &k, double s);

/// Haar-distributed element of SO(dim): QR of an iid Gaussian matrix with the
/// usual sign correction, then one column flip if the determinant is -1.
SpecialOrthogonal haar_special_orthogonal(Rng &rng, int dim);

}  // namespace gmagic

#endif  // GMAGIC_SKEWLIN_HPP_
