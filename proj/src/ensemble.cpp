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

#include "gmagic/ensemble.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gmagic/errors.hpp"
#include "gmagic/gstate.hpp"
#include "gmagic/magic.hpp"
#include "gmagic/parallel.hpp"
#include "gmagic/rng.hpp"
#include "gmagic/skewlin.hpp"

namespace gmagic {

namespace {

EntanglementSpectrum haar_spectrum(std::uint64_t seed, int sites, int m, int sample_index) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(sample_index));
    const SpecialOrthogonal o = haar_special_orthogonal(rng, 2 * sites);
    const CovarianceMatrix gamma = apply_orthogonal(vacuum(sites), o);
    return entanglement_spectrum(gamma, Bipartition(m, sites - m));
}

}  // namespace

LimitDensity::LimitDensity(double ell_in) : ell(ell_in), x_tilde(4.0 * ell_in * (1.0 - ell_in)) {
    if (!(ell > 0.0 && ell < 1.0)) {
        throw InputError("LimitDensity: ell must lie in (0, 1)");
    }
}

EnsembleEstimate sample_nonlocal_density(std::uint64_t seed, int sites, int m, int samples,
                                         int workers) {
    if (m < 1 || m > sites - 1) {
        throw InputError("sample_nonlocal_density: need 1 <= m <= L-1");
    }
    if (samples < 1) {
        throw InputError("sample_nonlocal_density: need at least one sample");
    }
    std::vector<double> densities(static_cast<std::size_t>(samples));
    parallel_for(samples, workers, [&](int i) {
        const EntanglementSpectrum spec = haar_spectrum(seed, sites, m, i);
        densities[static_cast<std::size_t>(i)] = nonlocal_bound(spec, 2.0).value / sites;
    });

    double mean = 0.0;
    for (double v : densities) mean += v;
    mean /= samples;
    double var = 0.0;
    for (double v : densities) var += (v - mean) * (v - mean);
    const double std_error = samples > 1 ? std::sqrt(var / (samples * (samples - 1.0))) : 0.0;
    return EnsembleEstimate{sites, static_cast<double>(m) / sites, samples, mean, std_error};
}

std::vector<double> sample_mode_squares(std::uint64_t seed, int sites, int m, int samples,
                                        int workers) {
    if (m < 1 || m > sites - 1) {
        throw InputError("sample_mode_squares: need 1 <= m <= L-1");
    }
    const int r = m < sites - m ? m : sites - m;
    std::vector<double> xs(static_cast<std::size_t>(samples) * static_cast<std::size_t>(r));
    parallel_for(samples, workers, [&](int i) {
        const EntanglementSpectrum spec = haar_spectrum(seed, sites, m, i);
        for (int k = 0; k < r; ++k) {
            xs[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) +
               static_cast<std::size_t>(k)] = spec.nu(k) * spec.nu(k);
        }
    });
    return xs;
}

double rho_limit(const LimitDensity &d, double x) {
    if (x <= 0.0 || x >= d.x_tilde) {
        return 0.0;
    }
    return std::sqrt((d.x_tilde - x) / x) / (2.0 * std::numbers::pi * d.ell * (1.0 - x));
}

double rho_limit_cdf(const LimitDensity &d, double x) {
    if (x <= 0.0) return 0.0;
    const double norm = (1.0 - std::sqrt(std::max(0.0, 1.0 - d.x_tilde))) / (2.0 * d.ell);
    if (x >= d.x_tilde) return norm;
    // Antiderivative under x = x_tilde sin^2(theta):
    //   (1/(pi ell)) [theta - kappa atan(kappa tan(theta))], kappa^2 = 1 - x_tilde.
    const double theta = std::asin(std::sqrt(x / d.x_tilde));
    const double kappa = std::sqrt(std::max(0.0, 1.0 - d.x_tilde));
    return (theta - kappa * std::atan(kappa * std::tan(theta))) / (std::numbers::pi * d.ell);
}

double j_quadrature(double ell) {
    const LimitDensity d(ell);
    const double xt = d.x_tilde;
    auto integrand = [xt](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const double x = xt * s * s;
        const double numer = std::log(1.0 - x + x * x) * c * c;
        if (xt == 1.0) {
            // 1 - sin^2 = cos^2 cancels exactly at the symmetric cut.
            return std::log(1.0 - x + x * x);
        }
        return numer / (1.0 - xt * s * s);
    };
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, 0.5 * std::numbers::pi, 12, 1e-12, &error);
    const double value = -(xt / std::numbers::pi) * integral;
    if (error > 1e-9 * (1.0 + std::abs(integral))) {
        throw NumericError("j_quadrature: integral did not converge (ell = " +
                           std::to_string(ell) + ", error estimate " + std::to_string(error) +
                           ")");
    }
    return value;
}

namespace {

double j_thermo_from_x_tilde(double x_tilde) {
    const std::complex<double> phase = std::polar(1.0, std::numbers::pi / 3.0);
    const double w = std::sqrt(std::max(0.0, 1.0 - x_tilde));
    const std::complex<double> z = std::sqrt(1.0 - x_tilde * phase);
    const std::complex<double> value =
        2.0 * w * std::log((w + z) / (w + 1.0)) - 2.0 * std::log((1.0 + z) / 2.0);
    return value.real();
}

}  // namespace

double j_thermo(double ell) {
    const LimitDensity d(ell);
    return j_thermo_from_x_tilde(d.x_tilde);
}

double j_thermo_fraction(int m, int sites) {
    if (m < 1 || m > sites - 1) {
        throw InputError("j_thermo_fraction: need 1 <= m <= L-1");
    }
    // Integer numerator makes the value exactly symmetric under m -> L - m.
    const double x_tilde = 4.0 * static_cast<double>(m) * static_cast<double>(sites - m) /
                           (static_cast<double>(sites) * static_cast<double>(sites));
    return j_thermo_from_x_tilde(x_tilde);
}

}  // namespace gmagic
