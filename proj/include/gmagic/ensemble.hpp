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

#ifndef GMAGIC_ENSEMBLE_HPP_
#define GMAGIC_ENSEMBLE_HPP_

#include <cstdint>
#include <vector>

namespace gmagic {

struct EnsembleEstimate {
    int sites;
    double ell;        // bipartition fraction m / L
    int samples;
    double mean;       // nonlocal 2-SRE density, nats per site
    double std_error;
};

/// Limiting density of x = nu^2 for Haar-random Gaussian states at fixed
/// bipartition fraction ell, supported on (0, x_tilde) with
/// x_tilde = 4 ell (1 - ell). For ell > 1/2 this is the continuous part; the
/// remaining weight (2 ell - 1)/ell sits in an atom at x = 1.
struct LimitDensity {
    explicit LimitDensity(double ell);

    double ell;
    double x_tilde;
};

/// Mean and standard error of nonlocal_bound(spectrum, 2)/L over Haar-random
/// pure states. Per-sample streams derive from (seed, sample index), so the
/// result is independent of the worker count.
EnsembleEstimate sample_nonlocal_density(std::uint64_t seed, int sites, int m, int samples,
                                         int workers = 1);

/// Density value at x; zero outside (0, x_tilde).
double rho_limit(const LimitDensity &d, double x);

/// Cumulative integral of rho_limit from 0 to x (closed form).
double rho_limit_cdf(const LimitDensity &d, double x);

/// All nu^2 values pooled over Haar samples, for histogram comparisons.
std::vector<double> sample_mode_squares(std::uint64_t seed, int sites, int m, int samples,
                                        int workers = 1);

/// Average nonlocal 2-SRE density by adaptive quadrature of
/// -ell * integral of log(1 - x + x^2) against rho_limit, with the
/// x = x_tilde sin^2(theta) substitution absorbing the endpoint singularity.
double j_quadrature(double ell);

/// Closed form of the same quantity via principal-branch complex square
/// roots and logarithms; depends on ell only through x_tilde.
double j_thermo(double ell);

/// j_thermo at ell = m / sites, computed from the integers so the value is
/// exactly symmetric under m -> sites - m.
double j_thermo_fraction(int m, int sites);

}  // namespace gmagic

#endif  // GMAGIC_ENSEMBLE_HPP_
