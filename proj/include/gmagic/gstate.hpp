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

#ifndef GMAGIC_GSTATE_HPP_
#define GMAGIC_GSTATE_HPP_

#include <vector>

#include <Eigen/Dense>

#include "gmagic/skewlin.hpp"

namespace gmagic {

inline constexpr double kPurityTol = 1e-8;
inline constexpr double kClampTol = 1e-10;

/// Covariance matrix of a fermionic Gaussian state on L sites: the 2L x 2L
/// skew matrix of two-point Majorana correlators. Site j owns Majorana
/// indices (2j, 2j+1), so a cut after the first m sites is a leading
/// principal block.
class CovarianceMatrix {
  public:
    explicit CovarianceMatrix(SkewMatrix gamma);

    int sites() const { return dim() / 2; }
    int dim() const { return gamma_.dim(); }
    const SkewMatrix &gamma() const { return gamma_; }
    const Eigen::MatrixXd &mat() const { return gamma_.mat(); }

    /// Max deviation of Gamma^2 from -I.
    double purity_deviation() const;
    bool is_pure(double tol = kPurityTol) const { return purity_deviation() <= tol; }
    void require_pure(double tol = kPurityTol) const;

  private:
    SkewMatrix gamma_;
};

/// A : B split into the first m and the remaining n sites.
class Bipartition {
  public:
    Bipartition(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int sites() const { return m_ + n_; }
    int min_side() const { return m_ < n_ ? m_ : n_; }
    int max_side() const { return m_ < n_ ? n_ : m_; }

    /// Copy with m <= n, flagging whether the labels were exchanged.
    Bipartition normalized(bool *swapped = nullptr) const;

  private:
    int m_;
    int n_;
};

/// Single-particle entanglement spectrum: the positive singular values of the
/// subsystem block, one per A-B mode pair, in [0,1] sorted descending.
class EntanglementSpectrum {
  public:
    explicit EntanglementSpectrum(std::vector<double> nus);

    const std::vector<double> &nus() const { return nus_; }
    int size() const { return static_cast<int>(nus_.size()); }
    double nu(int k) const { return nus_[static_cast<std::size_t>(k)]; }
    /// mu_k = sqrt(1 - nu_k^2), derived on demand.
    double mu(int k) const;

  private:
    std::vector<double> nus_;
};

/// Product state |0...0>: Gamma = ⊕_L [[0,1],[-1,0]].
CovarianceMatrix vacuum(int sites);

/// Gamma -> O Gamma O^T.
CovarianceMatrix apply_orthogonal(const CovarianceMatrix &gamma, const SpecialOrthogonal &o);

/// Spectrum of the smaller-side diagonal block of a pure state; singular
/// values come in degenerate pairs and one representative per pair is kept.
EntanglementSpectrum entanglement_spectrum(const CovarianceMatrix &gamma, const Bipartition &p);

/// Renyi entanglement entropy of the given order in nats (order 1 = von
/// Neumann): sum over modes of the binary entropy of (1 + nu_k)/2.
double entanglement_entropy(const EntanglementSpectrum &spec, double order);

}  // namespace gmagic

#endif  // GMAGIC_GSTATE_HPP_
